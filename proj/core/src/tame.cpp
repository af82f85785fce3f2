#include "wildchar/tame.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace wildchar {

template <class F>
TamePoint<F> tame_traces(const TameTriple<F>& t) {
  const Mat2<F> m12 = t.m1 * t.m2;
  return {t.m1.trace(),          t.m2.trace(),          t.m3.trace(),
          (m12 * t.m3).trace(),  m12.trace(),           (t.m2 * t.m3).trace(),
          (t.m3 * t.m1).trace()};
}

template <class F>
std::pair<F, F> fricke_pq(const TamePoint<F>& p) {
  const F& a1 = p.a1;
  const F& a2 = p.a2;
  const F& a3 = p.a3;
  F pp = a1 * p.x23 + a2 * p.x31 + a3 * p.x12 - a1 * a2 * a3;
  F q = a1 * a1 + a2 * a2 + a3 * a3 + p.x12 * p.x12 + p.x23 * p.x23 + p.x31 * p.x31 +
        p.x12 * p.x23 * p.x31 - a1 * a2 * p.x12 - a2 * a3 * p.x23 - a3 * a1 * p.x31 - F(4);
  return {std::move(pp), std::move(q)};
}

template <class F>
F fricke_residual(const TamePoint<F>& p) {
  const auto [pp, q] = fricke_pq(p);
  return p.a4 * p.a4 - pp * p.a4 + q;
}

template <class F>
std::pair<F, F> extended_traces(const TameTriple<F>& t) {
  const Mat2<F> m1i = sl2_inv(t.m1);
  const Mat2<F> m2i = sl2_inv(t.m2);
  return {(t.m1 * t.m2 * m1i * t.m3).trace(),
          (t.m1 * t.m2 * t.m1 * m2i * m1i * t.m3).trace()};
}

template <class F>
std::pair<F, F> extended_traces_formula(const TamePoint<F>& p) {
  const F& x13 = p.x31;
  const F k1 = p.a1 * p.a4 + p.a2 * p.a3;
  const F k2 = p.a1 * p.a3 + p.a2 * p.a4;
  return {-p.x12 * x13 - p.x23 + k1,
          p.x12 * p.x12 * x13 + p.x12 * p.x23 - x13 - p.x12 * k1 + k2};
}

template <class F>
bool on_fricke_surface(const TamePoint<F>& p, double tol) {
  const auto [pp, q] = fricke_pq(p);
  const F r = p.a4 * p.a4 - pp * p.a4 + q;
  const double scale = std::max({1.0, magnitude(p.a4 * p.a4), magnitude(pp * p.a4), magnitude(q)});
  return nearly_zero(r, tol * scale);
}

namespace {

template <class F>
void require_on_surface(const TamePoint<F>& p, double tol) {
  if (!on_fricke_surface(p, tol)) {
    const F r = fricke_residual(p);
    throw Error(ErrorCode::off_surface, "point is off the Fricke surface (residual " +
                                            format_scalar(r) + ")");
  }
}

}  // namespace

template <class F>
TameTriple<F> tame_reconstruct(const TamePoint<F>& p, const F& alpha1, double tol) {
  const F one(1);
  const F two(2);
  if (nearly_zero(p.a1 - two, tol) || nearly_zero(p.a1 + two, tol)) {
    throw Error(ErrorCode::resonant_trace, "a1 = +-2: M1 has a repeated eigenvalue");
  }
  if (!nearly_zero(alpha1 * alpha1 - p.a1 * alpha1 + one, tol)) {
    throw Error(ErrorCode::invalid_root, format_scalar(alpha1) + " is not a root of X^2 - " +
                                             format_scalar(p.a1) + " X + 1");
  }
  require_on_surface(p, tol);

  const F inv = one / alpha1;
  const F d = alpha1 - inv;
  const F alpha2 = (p.x12 - inv * p.a2) / d;
  const F delta2 = (alpha1 * p.a2 - p.x12) / d;
  const F alpha3 = (p.x31 - inv * p.a3) / d;
  const F delta3 = (alpha1 * p.a3 - p.x31) / d;

  // X = beta2 gamma3, Y = gamma2 beta3 from the x23 and a4 equations.
  const F r1 = p.x23 - alpha2 * alpha3 - delta2 * delta3;
  const F r2 = p.a4 - alpha1 * alpha2 * alpha3 - inv * delta2 * delta3;
  const F x = (r2 - inv * r1) / d;
  const F y = r1 - x;
  // det = 1 forces beta_i gamma_i = alpha_i delta_i - 1.
  const F k2 = alpha2 * delta2 - one;
  const F k3 = alpha3 * delta3 - one;

  F beta2, gamma2, beta3, gamma3;
  if (!nearly_zero(x, tol)) {
    beta2 = one, gamma3 = x, gamma2 = k2, beta3 = k3 / x;
  } else if (!nearly_zero(y, tol)) {
    gamma2 = one, beta3 = y, beta2 = k2, gamma3 = k3 / y;
  } else if (!nearly_zero(k2, tol)) {
    beta2 = one, gamma2 = k2, beta3 = F(0), gamma3 = F(0);
  } else if (!nearly_zero(k3, tol)) {
    beta3 = one, gamma3 = k3, beta2 = F(0), gamma2 = F(0);
  } else {
    beta2 = gamma2 = beta3 = gamma3 = F(0);
  }

  TameTriple<F> out{Mat2<F>::diagonal(alpha1, inv), Mat2<F>{alpha2, beta2, gamma2, delta2},
                    Mat2<F>{alpha3, beta3, gamma3, delta3}};
  const TamePoint<F> back = tame_traces(out);
  const auto got = back.coords();
  const auto want = p.coords();
  bool ok = is_sl2(out.m2, tol) && is_sl2(out.m3, tol);
  for (std::size_t k = 0; ok && k < got.size(); ++k) {
    ok = nearly_zero(got[k] - want[k], tol * std::max(1.0, magnitude(want[k])));
  }
  if (!ok) {
    throw Error(ErrorCode::non_generic_point,
                "no triple in normal form reproduces this point (degenerate off-diagonal data)");
  }
  return out;
}

Complexd principal_eigenvalue(const Complexd& trace) {
  const Complexd root = std::sqrt(trace * trace - Complexd(4.0, 0.0));
  const Complexd a = (trace + root) / 2.0;
  const Complexd b = (trace - root) / 2.0;
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (std::abs(ma - mb) > 1e-12 * std::max(1.0, ma)) return ma > mb ? a : b;
  if (a.imag() != b.imag()) return a.imag() >= b.imag() ? a : b;
  return a.real() >= b.real() ? a : b;
}

TameTriple<Complexd> tame_reconstruct_float(const TamePoint<Complexd>& p, double tol) {
  return tame_reconstruct(p, principal_eigenvalue(p.a1), tol);
}

template <class F>
TripleInvariants<F> triple_invariants(const TameTriple<F>& t) {
  if (!t.m1.is_diagonal()) {
    throw Error(ErrorCode::not_diagonal, "triple_invariants needs M1 diagonal");
  }
  return {t.m1.m11, t.m2.m11, t.m2.m22, t.m3.m11, t.m3.m22,
          t.m2.m12 * t.m3.m21, t.m2.m21 * t.m3.m12};
}

namespace {

void check_index(int i) {
  if (i < 1 || i > 3) throw Error(ErrorCode::usage, "tame braid index must be 1, 2 or 3");
}

// Relabeling k steps forward: (M1, M2, M3) -> (M_{1+k}, M_{2+k}, M_{3+k}).
template <class F>
TameTriple<F> rotate(const TameTriple<F>& t, int k) {
  switch (k % 3) {
    case 1: return {t.m2, t.m3, t.m1};
    case 2: return {t.m3, t.m1, t.m2};
    default: return t;
  }
}

template <class F>
TamePoint<F> rotate(const TamePoint<F>& p, int k) {
  switch (k % 3) {
    case 1: return {p.a2, p.a3, p.a1, p.a4, p.x23, p.x31, p.x12};
    case 2: return {p.a3, p.a1, p.a2, p.a4, p.x31, p.x12, p.x23};
    default: return p;
  }
}

template <class F>
TameTriple<F> h1_matrix(const TameTriple<F>& t, bool inverse) {
  const Mat2<F> g = t.m1 * t.m2;
  const Mat2<F> gi = sl2_inv(g);
  return {t.m1, t.m2, inverse ? g * t.m3 * gi : gi * t.m3 * g};
}

// h1 is affine in (x23, x13): v' = A v + b with A = [[-1, -x12], [x12, x12^2 - 1]].
template <class F>
TamePoint<F> h1_coords(const TamePoint<F>& p, bool inverse) {
  const F k1 = p.a1 * p.a4 + p.a2 * p.a3;
  const F k2 = p.a1 * p.a3 + p.a2 * p.a4;
  const F& x12 = p.x12;
  TamePoint<F> out = p;
  if (!inverse) {
    out.x23 = -x12 * p.x31 - p.x23 + k1;
    out.x31 = x12 * x12 * p.x31 + x12 * p.x23 - p.x31 - x12 * k1 + k2;
  } else {
    const F u = p.x23 - k1;
    const F v = p.x31 - (k2 - x12 * k1);
    out.x23 = (x12 * x12 - F(1)) * u + x12 * v;
    out.x31 = -x12 * u - v;
  }
  return out;
}

}  // namespace

template <class F>
TameTriple<F> braid_matrix_action(int i, const TameTriple<F>& t) {
  check_index(i);
  return rotate(h1_matrix(rotate(t, i - 1), false), 4 - i);
}

template <class F>
TameTriple<F> braid_matrix_action_inverse(int i, const TameTriple<F>& t) {
  check_index(i);
  return rotate(h1_matrix(rotate(t, i - 1), true), 4 - i);
}

template <class F>
TamePoint<F> braid_coord_action(int i, const TamePoint<F>& p) {
  check_index(i);
  return rotate(h1_coords(rotate(p, i - 1), false), 4 - i);
}

template <class F>
TamePoint<F> braid_coord_action_inverse(int i, const TamePoint<F>& p) {
  check_index(i);
  return rotate(h1_coords(rotate(p, i - 1), true), 4 - i);
}

template <class F>
Representation<F> tame_to_groupoid(const TameTriple<F>& t) {
  std::map<std::string, Mat2<F>> assignment;
  for (const GeneratorSpec& g : tame_presentation()->generators()) {
    assignment.emplace(g.name, Mat2<F>::identity());
  }
  assignment["g11"] = t.m1;
  assignment["g22"] = t.m2;
  assignment["g33"] = t.m3;
  assignment["g44"] = t.m4();
  return Representation<F>(tame_presentation(), std::move(assignment));
}

template <class F>
TameTriple<F> tame_from_groupoid(const Representation<F>& rep) {
  return {rep.at("g11"), rep.at("g22"), rep.at("g33")};
}

TameTriple<GaussRational> random_tame_triple(Rng& rng, long bound, bool gaussian) {
  ExactMat m1 = random_exact_sl2(rng, bound, gaussian);
  ExactMat m2 = random_exact_sl2(rng, bound, gaussian);
  ExactMat m3 = random_exact_sl2(rng, bound, gaussian);
  return {std::move(m1), std::move(m2), std::move(m3)};
}

TameTriple<GaussRational> random_tame_triple_with_eigenvalue(Rng& rng, const GaussRational& alpha1,
                                                             long bound) {
  ExactMat m1 = random_sl2_with_eigenvalue(rng, alpha1, bound);
  ExactMat m2 = random_exact_sl2(rng, bound);
  ExactMat m3 = random_exact_sl2(rng, bound);
  return {std::move(m1), std::move(m2), std::move(m3)};
}

TamePoint<Complexd> to_float(const TamePoint<GaussRational>& p) {
  return {to_complex(p.a1),  to_complex(p.a2),  to_complex(p.a3), to_complex(p.a4),
          to_complex(p.x12), to_complex(p.x23), to_complex(p.x31)};
}

std::vector<CompositeReport> tame_composite_diagnostic(std::uint64_t seed, int samples) {
  std::vector<CompositeReport> out;
  std::array<int, 3> order = {1, 2, 3};
  do {
    for (const bool inverses : {false, true}) {
      Rng rng(seed);
      CompositeReport report;
      report.order = "h" + std::to_string(order[0]) + " h" + std::to_string(order[1]) + " h" +
                     std::to_string(order[2]);
      report.inverses = inverses;
      report.identity = true;
      for (int k = 0; k < samples; ++k) {
        const auto t = random_tame_triple(rng);
        auto image = t;
        for (int i : order) {
          image = inverses ? braid_matrix_action_inverse(i, image) : braid_matrix_action(i, image);
        }
        ++report.samples;
        if (tame_traces(image) != tame_traces(t)) {
          report.identity = false;
          break;
        }
      }
      out.push_back(std::move(report));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

#define WILDCHAR_INSTANTIATE(F)                                                           \
  template TamePoint<F> tame_traces(const TameTriple<F>&);                                \
  template std::pair<F, F> fricke_pq(const TamePoint<F>&);                                \
  template F fricke_residual(const TamePoint<F>&);                                        \
  template bool on_fricke_surface(const TamePoint<F>&, double);                           \
  template std::pair<F, F> extended_traces(const TameTriple<F>&);                         \
  template std::pair<F, F> extended_traces_formula(const TamePoint<F>&);                  \
  template TameTriple<F> tame_reconstruct(const TamePoint<F>&, const F&, double);         \
  template TripleInvariants<F> triple_invariants(const TameTriple<F>&);                   \
  template TameTriple<F> braid_matrix_action(int, const TameTriple<F>&);                  \
  template TameTriple<F> braid_matrix_action_inverse(int, const TameTriple<F>&);          \
  template TamePoint<F> braid_coord_action(int, const TamePoint<F>&);                     \
  template TamePoint<F> braid_coord_action_inverse(int, const TamePoint<F>&);             \
  template Representation<F> tame_to_groupoid(const TameTriple<F>&);                      \
  template TameTriple<F> tame_from_groupoid(const Representation<F>&);

WILDCHAR_INSTANTIATE(GaussRational)
WILDCHAR_INSTANTIATE(Complexd)

#undef WILDCHAR_INSTANTIATE

}  // namespace wildchar
