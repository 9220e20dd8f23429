#pragma once

#include <cstdint>
#include <random>

#include "superfed/chart.hpp"

namespace superfed {

/// Seeded generator for random test data. Draws avoid the standard
/// distributions so sequences are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(unsigned numerator, unsigned denominator) {
    return rng_() % denominator < numerator;
  }

  /// Nonzero rational with numerator in [-3,3] and denominator in [1,4].
  Rational nonzero_rational();

  /// Random superfunction whose terms all have the given parity and
  /// x-degree plus theta-count at most `degree`; each candidate term is kept
  /// with probability `keep_num / keep_den`, coefficients in {-2,-1,1,2}.
  Superfunction superfunction(Signature sig, Parity parity, unsigned degree,
                              unsigned keep_num = 1, unsigned keep_den = 2);

 private:
  std::mt19937_64 rng_;
};

}  // namespace superfed
