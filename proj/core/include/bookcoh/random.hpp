#pragma once

#include <cstdint>
#include <random>

#include "bookcoh/multivector.hpp"

namespace bookcoh {

/// Deterministic source for randomized property checks.  Bounded draws are
/// derived from raw mt19937_64 output so streams are reproducible across
/// platforms for a fixed seed.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-enough integer in [0, bound).
    int below(int bound) { return bound <= 1 ? 0 : static_cast<int>(next() % bound); }

    /// Inclusive range.
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    /// Small nonzero rational with numerator in ±1..max_num and
    /// denominator in 1..max_den.
    Rational rational(int max_num = 3, int max_den = 3) {
        int num = range(1, max_num) * (below(2) == 0 ? 1 : -1);
        return Rational(num, range(1, max_den));
    }

  private:
    std::mt19937_64 engine_;
};

Polynomial random_polynomial(RandomSource& rng, int n, int max_degree, int max_terms);

PolyMultivector random_multivector(RandomSource& rng, int n, int k, int max_degree,
                                   int max_terms);

}  // namespace bookcoh
