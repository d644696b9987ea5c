#ifndef OPTICROUTE_CORE_RNG_HPP
#define OPTICROUTE_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "core/errors.hpp"

namespace opticroute {

// splitmix64 mixing step; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for the stream identified by (seed, a, b). Streams derived from
// distinct ids are independent for practical purposes; identical ids give
// identical streams regardless of execution order or thread placement.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

// Deterministic generator. Draws bypass std distributions, whose output is
// implementation-defined; everything here is pinned to the mt19937_64 bit
// stream, which the standard fully specifies.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Exp(1) via inversion; the u == 0 corner is nudged to keep the draw finite.
  double exponential() {
    double u = uniform();
    if (u == 0.0) u = 0x1.0p-53;
    return -std::log1p(-u);
  }

  // Poisson count by summing unit exponentials until the mean is exceeded.
  // O(mean) draws; fine for the network and hop-trial scales used here.
  long poisson(double mean) {
    if (!(mean >= 0.0) || mean > 1e7)
      throw ParamError("poisson: mean must be in [0, 1e7]");
    long count = 0;
    double acc = exponential();
    while (acc <= mean) {
      ++count;
      acc += exponential();
    }
    return count;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace opticroute

#endif
