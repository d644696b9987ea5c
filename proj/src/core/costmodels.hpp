#ifndef OPTICROUTE_CORE_COSTMODELS_HPP
#define OPTICROUTE_CORE_COSTMODELS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "core/field.hpp"
#include "core/hopmc.hpp"

namespace opticroute {

// Maps node density to the macroscopic cost-function value of a microscopic
// model. Costs are divided by c_nominal; the bandwidth closed form 1/sqrt(l)
// already carries the nominal-network convention, so bandwidth, min-hop and
// constant default to c_nominal = 1, while the energy model defaults to the
// value that makes its curve pass through (lambda = 0.05, cost = 1).
class CostModel {
 public:
  enum class Variant { Bandwidth, Energy, MinHop, Constant, Tabulated };

  struct EnergyParams {
    double a;  // J/m^b
    double b;  // exponent, in (1, 6]
    double c;  // J
  };

  static CostModel bandwidth(double c_nominal = 1.0);
  static CostModel min_hop(double c_nominal = 1.0);
  static CostModel constant(double value, double c_nominal = 1.0);
  // c_nominal <= 0 selects the (0.05, 1) normalization, resolved at table
  // build time. Until build_energy_table runs, evaluate() raises StateError.
  static CostModel energy(double a, double b, double c, double c_nominal = 0.0);
  static CostModel tabulated(std::vector<double> lambdas, std::vector<double> costs,
                             double c_nominal = 1.0);

  Variant variant() const { return variant_; }
  double c_nominal() const { return c_nominal_; }
  const EnergyParams& energy_params() const;
  bool has_table() const { return !table_lambda_.empty(); }
  const std::vector<double>& table_lambda() const { return table_lambda_; }
  const std::vector<double>& table_cost() const { return table_cost_; }        // un-normalized
  const std::vector<double>& table_std_error() const { return table_se_; }

  // Monte-Carlo estimation of the energy model's raw cost curve E[C]/E[X]
  // over n_samples log-spaced densities in [lambda_min, lambda_max]. Resolves
  // an automatic c_nominal against lambda = 0.05.
  void build_energy_table(double lambda_min, double lambda_max, int n_samples, long n_trials,
                          std::uint64_t seed);

  // Macroscopic cost at density lambda (> 0), normalized by c_nominal.
  // Bandwidth: 1/sqrt(lambda). MinHop: sqrt(lambda). Constant: value.
  // Energy/Tabulated: interpolated log-linearly in lambda, clamped at the
  // table ends.
  double evaluate(double lambda) const;

 private:
  CostModel() = default;

  Variant variant_ = Variant::Constant;
  double c_nominal_ = 1.0;
  double constant_value_ = 1.0;
  EnergyParams energy_{0, 0, 0};
  bool pending_auto_nominal_ = false;
  std::vector<double> table_lambda_;
  std::vector<double> table_cost_;
  std::vector<double> table_se_;
};

// Hop distance minimizing (a d^b + c)/d: [c / ((b-1) a)]^(1/b). b <= 1 has no
// interior minimum and raises DomainError.
double d_opt(double a, double b, double c);

// Single-hop Monte Carlo under the energy cost a d^b + c (c = 0, b = 2 is the
// quadratic path used for testing). See hopmc::run_single_hop_mc.
HopStats energy_cost_mc(double lambda, double a, double b, double c, long n_trials,
                        std::uint64_t seed, std::vector<HopSample>* samples = nullptr);

// Closed-form per-hop expectations in the bandwidth-limited model:
// E[X] = 1/sqrt(2 lambda), E[D^2] = 4/(pi lambda), E[R] = sqrt(2/lambda).
HopStats bandwidth_hop_formulas(double lambda);

// Pointwise application of evaluate() over a density field. Builds the
// energy table first when absent, spanning [min/2, 2 max] of the field.
ScalarField2D build_cost_field(const ScalarField2D& density, CostModel& model);

}  // namespace opticroute

#endif
