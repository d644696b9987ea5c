#include "core/costmodels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace opticroute {

namespace {

constexpr int kDefaultTableSamples = 64;
constexpr long kDefaultTableTrials = 20000;

// Linear interpolation of cost against log(lambda), clamped at the ends.
double log_linear(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs.begin());
  const double t = (std::log(x) - std::log(xs[i - 1])) / (std::log(xs[i]) - std::log(xs[i - 1]));
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

}  // namespace

CostModel CostModel::bandwidth(double c_nominal) {
  if (!(c_nominal > 0.0)) throw ParamError("cost model: c_nominal must be positive");
  CostModel m;
  m.variant_ = Variant::Bandwidth;
  m.c_nominal_ = c_nominal;
  return m;
}

CostModel CostModel::min_hop(double c_nominal) {
  if (!(c_nominal > 0.0)) throw ParamError("cost model: c_nominal must be positive");
  CostModel m;
  m.variant_ = Variant::MinHop;
  m.c_nominal_ = c_nominal;
  return m;
}

CostModel CostModel::constant(double value, double c_nominal) {
  if (!(value > 0.0)) throw ParamError("cost model: constant value must be positive");
  if (!(c_nominal > 0.0)) throw ParamError("cost model: c_nominal must be positive");
  CostModel m;
  m.variant_ = Variant::Constant;
  m.constant_value_ = value;
  m.c_nominal_ = c_nominal;
  return m;
}

CostModel CostModel::energy(double a, double b, double c, double c_nominal) {
  if (!(a > 0.0) || !(c > 0.0)) throw ParamError("energy model: a and c must be positive");
  if (!(b > 1.0 && b <= 6.0)) throw ParamError("energy model: b must lie in (1, 6]");
  CostModel m;
  m.variant_ = Variant::Energy;
  m.energy_ = {a, b, c};
  if (c_nominal > 0.0) {
    m.c_nominal_ = c_nominal;
  } else {
    m.c_nominal_ = 1.0;
    m.pending_auto_nominal_ = true;
  }
  return m;
}

CostModel CostModel::tabulated(std::vector<double> lambdas, std::vector<double> costs,
                               double c_nominal) {
  if (lambdas.size() != costs.size() || lambdas.size() < 2)
    throw ParamError("tabulated model: need >= 2 matching (lambda, cost) pairs");
  if (!(c_nominal > 0.0)) throw ParamError("cost model: c_nominal must be positive");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0) || !(costs[i] > 0.0))
      throw ParamError("tabulated model: lambdas and costs must be positive");
    if (i > 0 && !(lambdas[i] > lambdas[i - 1]))
      throw ParamError("tabulated model: lambda grid must be strictly increasing");
  }
  CostModel m;
  m.variant_ = Variant::Tabulated;
  m.table_lambda_ = std::move(lambdas);
  m.table_cost_ = std::move(costs);
  m.table_se_.assign(m.table_lambda_.size(), 0.0);
  m.c_nominal_ = c_nominal;
  return m;
}

const CostModel::EnergyParams& CostModel::energy_params() const {
  if (variant_ != Variant::Energy) throw StateError("cost model: not an energy model");
  return energy_;
}

void CostModel::build_energy_table(double lambda_min, double lambda_max, int n_samples,
                                   long n_trials, std::uint64_t seed) {
  if (variant_ != Variant::Energy) throw StateError("cost model: table build is energy-only");
  if (!(lambda_min > 0.0) || !(lambda_max > lambda_min))
    throw ParamError("energy table: need 0 < lambda_min < lambda_max");
  if (n_samples < 2) throw ParamError("energy table: need >= 2 samples");

  table_lambda_.resize(n_samples);
  table_cost_.resize(n_samples);
  table_se_.resize(n_samples);
  const double log_lo = std::log(lambda_min);
  const double log_hi = std::log(lambda_max);
  for (int i = 0; i < n_samples; ++i) {
    const double lam = std::exp(log_lo + (log_hi - log_lo) * i / (n_samples - 1));
    const HopStats hs = energy_cost_mc(lam, energy_.a, energy_.b, energy_.c, n_trials,
                                       stream_seed(seed, 0x7ab1e, i));
    table_lambda_[i] = lam;
    table_cost_[i] = hs.mean_cost / hs.mean_progress;
    // First-order error propagation for the ratio of two means.
    const double rel = std::sqrt(std::pow(hs.se_cost / hs.mean_cost, 2) +
                                 std::pow(hs.se_progress / hs.mean_progress, 2));
    table_se_[i] = table_cost_[i] * rel;
  }

  if (pending_auto_nominal_) {
    double raw_at_ref;
    const double ref = 0.05;
    if (ref >= lambda_min && ref <= lambda_max) {
      raw_at_ref = log_linear(table_lambda_, table_cost_, ref);
    } else {
      const HopStats hs = energy_cost_mc(ref, energy_.a, energy_.b, energy_.c, n_trials,
                                         stream_seed(seed, 0x7ab1e, 0xffff));
      raw_at_ref = hs.mean_cost / hs.mean_progress;
    }
    c_nominal_ = raw_at_ref;
    pending_auto_nominal_ = false;
  }
}

double CostModel::evaluate(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("evaluate: lambda must be positive");
  switch (variant_) {
    case Variant::Bandwidth: return 1.0 / std::sqrt(lambda) / c_nominal_;
    case Variant::MinHop: return std::sqrt(lambda) / c_nominal_;
    case Variant::Constant: return constant_value_ / c_nominal_;
    case Variant::Energy:
      if (!has_table())
        throw StateError("evaluate: energy model used before its table was built");
      [[fallthrough]];
    case Variant::Tabulated:
      return log_linear(table_lambda_, table_cost_, lambda) / c_nominal_;
  }
  throw StateError("evaluate: unknown variant");
}

double d_opt(double a, double b, double c) {
  if (!(a > 0.0) || !(c > 0.0)) throw DomainError("d_opt: a and c must be positive");
  if (!(b > 1.0)) throw DomainError("d_opt: no interior minimum for b <= 1");
  return std::pow(c / ((b - 1.0) * a), 1.0 / b);
}

HopStats energy_cost_mc(double lambda, double a, double b, double c, long n_trials,
                        std::uint64_t seed, std::vector<HopSample>* samples) {
  return hopmc::run_single_hop_mc(lambda, a, b, c, n_trials, seed, samples);
}

HopStats bandwidth_hop_formulas(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("bandwidth_hop_formulas: lambda must be positive");
  HopStats st;
  st.mean_progress = 1.0 / std::sqrt(2.0 * lambda);
  st.mean_cost = 4.0 / (std::numbers::pi * lambda);
  st.mean_ratio = std::sqrt(2.0 / lambda);
  st.n_trials = 0;
  return st;
}

ScalarField2D build_cost_field(const ScalarField2D& density, CostModel& model) {
  if (density.kind() != FieldKind::Density)
    throw ParamError("build_cost_field: input field must be a density field");
  if (model.variant() == CostModel::Variant::Energy && !model.has_table())
    model.build_energy_table(density.min_value() / 2.0, density.max_value() * 2.0,
                             kDefaultTableSamples, kDefaultTableTrials, /*seed=*/0x5eedu);

  const GridSpec& spec = density.spec();
  std::vector<double> values(density.values().begin(), density.values().end());
  for (int iy = 0; iy < spec.ny; ++iy) {
    for (int ix = 0; ix < spec.nx; ++ix) {
      double& v = values[static_cast<std::size_t>(iy) * spec.nx + ix];
      try {
        v = model.evaluate(v);
      } catch (const std::runtime_error& e) {
        throw DomainError("build_cost_field at node (" + std::to_string(spec.x_at(ix)) + ", " +
                          std::to_string(spec.y_at(iy)) + "): " + e.what());
      }
    }
  }
  return ScalarField2D(spec, std::move(values), FieldKind::Cost);
}

}  // namespace opticroute
