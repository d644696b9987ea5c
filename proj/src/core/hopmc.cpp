#include "core/hopmc.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace opticroute::hopmc {

namespace {

struct CostParams {
  double a, b, c;

  double hop_cost(double d) const {
    if (b == 2.0) return a * d * d + c;
    return a * std::pow(d, b) + c;
  }

  // Hop distance minimizing (a d^b + c)/d; 0 when c = 0 (no interior minimum).
  double d_opt() const {
    if (c == 0.0) return 0.0;
    return std::pow(c / ((b - 1.0) * a), 1.0 / b);
  }

  double ratio_min() const { return c > 0.0 ? hop_cost(d_opt()) / d_opt() : 0.0; }
};

// Bounding box of the sub-level set A(r) = {(x,y): x > 0, y > 0,
// (a d^b + c)/x <= r}; tight for b = 2 where A(r) is the upper half of a
// circle, conservative otherwise.
struct LevelBox {
  double x_lo, x_hi, y_hi;

  static LevelBox of(const CostParams& cp, double r) {
    if (cp.b == 2.0) {
      const double center = r / (2.0 * cp.a);
      const double rad = std::sqrt(std::max(center * center - cp.c / cp.a, 0.0));
      return {std::max(center - rad, 0.0), center + rad, rad};
    }
    // Roots of a x^b + c = r x bound the x-extent: any point of A(r)
    // satisfies a x^b + c <= a d^b + c <= r x. Then y^2 = d^2 - x^2 <=
    // x_hi^2 - x_lo^2 since d, x both lie in [x_lo, x_hi].
    auto g = [&](double x) { return r * x - cp.a * std::pow(x, cp.b) - cp.c; };
    const double x_star = std::pow(r / (cp.a * cp.b), 1.0 / (cp.b - 1.0));
    const double x_big = std::pow(r / cp.a, 1.0 / (cp.b - 1.0));
    auto bisect = [&](double lo, double hi) {
      const bool lo_neg = g(lo) <= 0.0;
      for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) <= 0.0) == lo_neg)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    };
    double x_lo = 0.0, x_hi = x_big;
    if (cp.c > 0.0) {
      x_lo = bisect(0.0, x_star);
      x_hi = bisect(x_big * (1.0 + 1e-12), x_star);
      if (x_lo > x_hi) std::swap(x_lo, x_hi);
    }
    return {x_lo, x_hi, std::sqrt(std::max(x_hi * x_hi - x_lo * x_lo, 0.0))};
  }

  // Area after clipping to the window [0,w]^2.
  double clipped_area(double w) const {
    const double bw = std::min(x_hi, w) - x_lo;
    const double bh = std::min(y_hi, w);
    return (bw > 0.0 && bh > 0.0) ? bw * bh : 0.0;
  }
};

// One trial: the ratio-minimizing Poisson point in [0,W]^2, or nothing if the
// window holds no usable point. Sub-level sets of the ratio are visited in
// stages of growing excess over the minimum attainable ratio; the first stage
// with a hit contains the global argmin, because every unexplored point has a
// ratio above the stage cap.
std::optional<HopSample> single_trial(Rng& rng, double lambda, const CostParams& cp, double w) {
  const double r_min = cp.ratio_min();

  // Size the first stage for ~15 expected bounding-box points.
  double delta;
  {
    double lo = 0.0, hi = std::max(r_min, 1.0) * 1e-9;
    for (int i = 0; i < 500; ++i) {
      if (lambda * LevelBox::of(cp, r_min + hi).clipped_area(w) >= 15.0) break;
      lo = hi;
      hi *= 2.0;
    }
    for (int i = 0; i < 40; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (lambda * LevelBox::of(cp, r_min + mid).clipped_area(w) < 15.0)
        lo = mid;
      else
        hi = mid;
    }
    delta = hi;
  }

  double r_prev = 0.0;
  HopSample best{};
  for (int stage = 0; stage < 500; ++stage) {
    const double r_cur = r_min + delta;
    const LevelBox box = LevelBox::of(cp, r_cur);
    bool found = false;
    const double bx0 = box.x_lo, bx1 = std::min(box.x_hi, w);
    const double by1 = std::min(box.y_hi, w);
    if (bx1 > bx0 && by1 > 0.0) {
      const long n = rng.poisson(lambda * (bx1 - bx0) * by1);
      for (long k = 0; k < n; ++k) {
        const double x = rng.uniform(bx0, bx1);
        const double y = rng.uniform(0.0, by1);
        if (x <= 0.0) continue;
        const double d = std::hypot(x, y);
        const double cost = cp.hop_cost(d);
        const double ratio = cost / x;
        if (!(ratio > r_prev && ratio <= r_cur)) continue;  // outside this stage's shell
        if (!found || ratio < best.ratio || (ratio == best.ratio && d < best.d)) {
          best = {x, y, d, cost, ratio};
          found = true;
        }
      }
    }
    if (found) return best;
    // Once r_cur is so large that only an x-sliver of width 1e-12 w of the
    // window remains uncovered, the window is effectively empty.
    if (cp.hop_cost(std::sqrt(2.0) * w) / r_cur <= 1e-12 * w) return std::nullopt;
    r_prev = r_cur;
    delta *= 3.0;
  }
  return std::nullopt;
}

}  // namespace

HopStats run_single_hop_mc(double lambda, double a, double b, double c, long n_trials,
                           std::uint64_t seed, std::vector<HopSample>* samples) {
  if (!(lambda > 0.0)) throw DomainError("single-hop mc: lambda must be positive");
  if (!(a > 0.0) || !(b > 1.0) || !(c >= 0.0))
    throw ParamError("single-hop mc: need a > 0, b > 1, c >= 0");
  if (n_trials < 10000) throw ParamError("single-hop mc: n_trials must be >= 10000");

  const CostParams cp{a, b, c};
  const double w0 = 10.0 * std::max(cp.d_opt(), 1.0 / std::sqrt(lambda));

  HopStats st;
  st.n_trials = n_trials;
  if (samples) samples->reserve(samples->size() + static_cast<std::size_t>(n_trials));

  // Welford accumulators, strictly in trial order.
  double mx = 0, m2x = 0, mc = 0, m2c = 0, mr = 0, m2r = 0;
  for (long trial = 0; trial < n_trials; ++trial) {
    std::optional<HopSample> hop;
    double w = w0;
    for (std::uint64_t attempt = 0;; ++attempt) {
      Rng rng(stream_seed(seed, static_cast<std::uint64_t>(trial), attempt));
      hop = single_trial(rng, lambda, cp, w);
      if (hop) break;
      if (attempt >= 12)
        throw ConvergenceError("single-hop mc: no candidate after 12 window enlargements");
      ++st.resample_count;
      w *= 2.0;
    }
    const double n = static_cast<double>(trial + 1);
    const double dx = hop->x - mx;
    mx += dx / n;
    m2x += dx * (hop->x - mx);
    const double dc = hop->cost - mc;
    mc += dc / n;
    m2c += dc * (hop->cost - mc);
    const double dr = hop->ratio - mr;
    mr += dr / n;
    m2r += dr * (hop->ratio - mr);
    if (samples) samples->push_back(*hop);
  }

  st.mean_progress = mx;
  st.mean_cost = mc;
  st.mean_ratio = mr;
  const double nn = static_cast<double>(n_trials);
  st.se_progress = std::sqrt(m2x / (nn - 1.0) / nn);
  st.se_cost = std::sqrt(m2c / (nn - 1.0) / nn);
  st.se_ratio = std::sqrt(m2r / (nn - 1.0) / nn);
  return st;
}

}  // namespace opticroute::hopmc
