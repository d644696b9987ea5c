#ifndef OPTICROUTE_CORE_HOPMC_HPP
#define OPTICROUTE_CORE_HOPMC_HPP

#include <cstdint>
#include <vector>

namespace opticroute {

// Per-hop expectations estimated from repeated single-hop experiments.
// Closed-form results carry n_trials = 0 and zero standard errors.
struct HopStats {
  double mean_progress = 0.0;  // E[X], meters
  double mean_cost = 0.0;      // E[C], model units
  double mean_ratio = 0.0;     // E[R], model units per meter
  double se_progress = 0.0;
  double se_cost = 0.0;
  double se_ratio = 0.0;
  long n_trials = 0;
  long resample_count = 0;  // trials that needed the window enlarged
};

// One accepted next hop: progress x, lateral offset y, distance d, hop cost,
// and the achieved cost-progress ratio.
struct HopSample {
  double x, y, d, cost, ratio;
};

namespace hopmc {

// Repeated single-hop experiment in the quadrant window [0,W] x [0,W],
// W = 10 * max(d_opt, 1/sqrt(lambda)): sample a Poisson process of intensity
// lambda, pick the point minimizing (a d^b + c)/x over points with x > 0, and
// record its progress and cost a d^b + c. Ties go to the smaller distance.
//
// Sampling walks the sub-level sets of the ratio in geometric stages, so only
// points that can possibly attain the minimum are ever materialized; the
// selected point is distributed exactly as the argmin over the full window.
// Trials with an empty window are resampled with W doubled (counted in
// resample_count). Each trial draws from a stream derived from (seed, trial,
// attempt): results are bit-identical for a fixed seed regardless of
// execution order.
//
// a > 0, b > 1, c >= 0; c = 0 with b = 2 is the quadratic transmission-cost
// path (cost = d^2). If `samples` is non-null, every accepted hop is appended.
HopStats run_single_hop_mc(double lambda, double a, double b, double c, long n_trials,
                           std::uint64_t seed, std::vector<HopSample>* samples = nullptr);

}  // namespace hopmc
}  // namespace opticroute

#endif
