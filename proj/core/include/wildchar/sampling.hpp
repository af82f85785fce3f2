#pragma once

#include <cstdint>
#include <random>

#include "wildchar/mat2.hpp"
#include "wildchar/scalar.hpp"

namespace wildchar {

/// Seeded generator. Integer draws use plain modular reduction so that a seed
/// gives the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (next() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// p/q with |p| <= bound and 1 <= q <= bound.
GaussRational random_rational(Rng& rng, long bound);
GaussRational random_nonzero_rational(Rng& rng, long bound);
/// Rational real part plus, with probability 1/2, a rational imaginary part.
GaussRational random_gauss(Rng& rng, long bound);

/// Integer SL2 matrix built as a product of `length` alternating unipotent
/// factors; factors that would push an entry above `bound` are redrawn
/// smaller. length 0 gives the identity.
ExactMat random_sl2(Rng& rng, long bound, int length);
/// Seeded convenience form with a fixed factor count.
ExactMat random_sl2(std::uint64_t seed, long bound);

/// Generic SL2 element over Q(i): upper * lower * upper * diag(d, 1/d) with
/// random rational parameters.
ExactMat random_exact_sl2(Rng& rng, long bound = 5, bool gaussian = false);

/// P diag(alpha, 1/alpha) P^-1 for a random P in SL2.
ExactMat random_sl2_with_eigenvalue(Rng& rng, const GaussRational& alpha, long bound = 5);

}  // namespace wildchar
