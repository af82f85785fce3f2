#include "wildchar/sampling.hpp"

#include <algorithm>
#include <cstdlib>

namespace wildchar {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
  return lo + static_cast<long>(next() % span);
}

GaussRational random_rational(Rng& rng, long bound) {
  const long p = rng.uniform(-bound, bound);
  const long q = rng.uniform(1, bound);
  return GaussRational::fraction(p, q);
}

GaussRational random_nonzero_rational(Rng& rng, long bound) {
  for (;;) {
    GaussRational r = random_rational(rng, bound);
    if (!r.is_zero()) return r;
  }
}

GaussRational random_gauss(Rng& rng, long bound) {
  GaussRational re = random_rational(rng, bound);
  if (!rng.coin()) return re;
  const GaussRational im = random_rational(rng, bound);
  return {re.re(), im.re()};
}

namespace {

long max_abs_entry(const ExactMat& m) {
  long out = 0;
  for (const auto* e : {&m.m11, &m.m12, &m.m21, &m.m22}) {
    out = std::max(out, std::abs(e->re().get_num().get_si()));
  }
  return out;
}

}  // namespace

ExactMat random_sl2(Rng& rng, long bound, int length) {
  ExactMat out = ExactMat::identity();
  for (int k = 0; k < length; ++k) {
    const bool upper = (k % 2) == 0;
    for (long b = bound; b >= 1; b /= 2) {
      const long u = rng.uniform(-b, b);
      const ExactMat f = upper ? ExactMat::upper_unipotent(u) : ExactMat::lower_unipotent(u);
      ExactMat candidate = out * f;
      if (max_abs_entry(candidate) <= bound) {
        out = std::move(candidate);
        break;
      }
    }
  }
  return out;
}

ExactMat random_sl2(std::uint64_t seed, long bound) {
  Rng rng(seed);
  return random_sl2(rng, bound, 6);
}

ExactMat random_exact_sl2(Rng& rng, long bound, bool gaussian) {
  auto draw = [&] { return gaussian ? random_gauss(rng, bound) : random_rational(rng, bound); };
  const GaussRational p = draw();
  const GaussRational q = draw();
  const GaussRational r = draw();
  GaussRational d = random_nonzero_rational(rng, bound);
  return ExactMat::upper_unipotent(p) * ExactMat::lower_unipotent(q) *
         ExactMat::upper_unipotent(r) * ExactMat::diagonal(d, d.inverse());
}

ExactMat random_sl2_with_eigenvalue(Rng& rng, const GaussRational& alpha, long bound) {
  const ExactMat p = random_exact_sl2(rng, bound);
  return p * ExactMat::diagonal(alpha, alpha.inverse()) * sl2_inv(p);
}

}  // namespace wildchar
