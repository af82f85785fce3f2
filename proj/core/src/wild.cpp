#include "wildchar/wild.hpp"

#include "wildchar/tame.hpp"

namespace wildchar {

std::string_view chart_name(Chart c) { return c == Chart::plus ? "plus" : "minus"; }

Chart parse_chart(std::string_view text) {
  if (text == "plus") return Chart::plus;
  if (text == "minus") return Chart::minus;
  throw Error(ErrorCode::parse_error,
              "unknown chart \"" + std::string(text) + "\" (expected plus|minus)");
}

namespace {

template <class F>
void require_nonzero_lambda(const F& lambda) {
  if (is_zero(lambda)) throw Error(ErrorCode::zero_lambda, "lambda must be nonzero");
}

// lambda - 1/lambda, rejecting the resonant values.
template <class F>
F lambda_gap(const F& lambda) {
  require_nonzero_lambda(lambda);
  const F gap = lambda - F(1) / lambda;
  if (is_zero(gap)) throw Error(ErrorCode::resonant_lambda, "lambda = +-1 is resonant");
  return gap;
}

template <class F>
TamePoint<F> fricke_instance(const WildPoint<F>& p) {
  require_nonzero_lambda(p.lambda);
  const F inv = F(1) / p.lambda;
  return {p.t0, p.s, p.lambda + inv, p.t1, p.x, inv - p.lambda + p.lambda * p.s, p.y};
}

}  // namespace

template <class F>
WildPoint<F> wild_traces(const WildRep<F>& r, Chart chart) {
  const Mat2<F> u = r.U1() * r.U2();
  const Mat2<F> m0u = r.m0 * u;
  return {r.lambda,
          r.m0.trace(),
          (m0u * r.Mhat()).trace(),
          u.trace(),
          m0u.trace(),
          (r.m0 * r.Mhat()).trace(),
          chart};
}

template <class F>
F wild_residual(const WildPoint<F>& p) {
  return fricke_residual(fricke_instance(p));
}

template <class F>
bool on_wild_surface(const WildPoint<F>& p, double tol) {
  return on_fricke_surface(fricke_instance(p), tol);
}

template <class F>
F truncated_wild_residual(const WildPoint<F>& p) {
  require_nonzero_lambda(p.lambda);
  const F inv = F(1) / p.lambda;
  const F c = inv - p.lambda + p.lambda * p.s;
  const F l = p.lambda + inv;
  const F pp = p.t0 * c + p.s * p.y + l * p.x;
  const F q = p.t0 * p.t0 + p.s * p.s + l * l + p.x * p.x + c * c + p.y * p.y + p.x * p.y * c;
  return p.t1 * p.t1 - pp * p.t1 + q;
}

template <class F>
F expanded_truncated_wild_cubic(const WildPoint<F>& p) {
  require_nonzero_lambda(p.lambda);
  const F& l = p.lambda;
  const F inv = F(1) / l;
  const F& s = p.s;
  const F& x = p.x;
  const F& y = p.y;
  const F& t0 = p.t0;
  const F& t1 = p.t1;
  return l * x * y * s + x * x + y * y + (F(1) + l * l) * s * s - (l - inv) * x * y -
         t1 * s * y - t1 * (l + inv) * x - (l * t0 * t1 + F(2) * l * l - F(2)) * s + t0 * t0 +
         t1 * t1 + t0 * t1 * (l - inv) + F(2) * l * l - F(2) * inv * inv;
}

template <class F>
WildInvariants<F> invariants_from_point(const WildPoint<F>& p) {
  const F gap = lambda_gap(p.lambda);
  const F& l = p.lambda;
  const F inv = F(1) / l;
  const F a0 = (p.y - inv * p.t0) / gap;
  const F d0 = (l * p.t0 - p.y) / gap;
  // t1 = l a0 (s-1) + l u2b0 + u1c0 / l + d0 / l and x = t0 + a0 (s-2) + u2b0 + u1c0.
  const F r1 = p.t1 - l * a0 * (p.s - F(1)) - d0 * inv;
  const F r2 = p.x - p.t0 - a0 * (p.s - F(2));
  const F u2b0 = (r1 - r2 * inv) / gap;
  const F u1c0 = r2 - u2b0;
  return {l, p.s - F(2), u1c0, u2b0, a0, d0};
}

template <class F>
WildRep<F> wild_reconstruct(const WildPoint<F>& p, double tol) {
  const WildInvariants<F> inv = invariants_from_point(p);
  if (nearly_zero(inv.u1u2, tol)) {
    throw Error(ErrorCode::boundary_point_s2, "s = 2: the canonical representative u1 = 1 needs u2 = 0");
  }
  if (!on_wild_surface(p, tol)) {
    const F r = wild_residual(p);
    throw Error(ErrorCode::off_surface,
                "point is off the wild cubic (residual " + format_scalar(r) + ")");
  }
  return {Mat2<F>{inv.a0, inv.u2b0 / inv.u1u2, inv.u1c0, inv.d0}, F(1), inv.u1u2, inv.lambda};
}

template <class F>
WildInvariants<F> wild_equiv_invariants(const WildRep<F>& r) {
  return {r.lambda, r.u1 * r.u2, r.u1 * r.m0.m21, r.u2 * r.m0.m12, r.m0.m11, r.m0.m22};
}

template <class F>
WildRep<F> conjugate_by_diagonal(const WildRep<F>& r, const F& alpha) {
  const Mat2<F> d = Mat2<F>::diagonal(alpha, F(1) / alpha);
  const F a2 = alpha * alpha;
  return {d * r.m0 * sl2_inv(d), a2 * r.u1, r.u2 / a2, r.lambda};
}

template <class F>
WildPoint<F> chart_swap(const WildPoint<F>& p) {
  const F gap = lambda_gap(p.lambda);
  const F l = p.lambda + F(1) / p.lambda;
  WildPoint<F> out = p;
  out.lambda = F(1) / p.lambda;
  out.x = p.x + p.t0 * p.s * l / gap - F(2) * p.y * p.s / gap + F(4) * p.y / gap -
          F(2) * p.t0 * l / gap;
  out.t1 = p.t1 - (p.s - F(2)) * (l * p.y - F(2) * p.t0) / gap;
  out.chart = other(p.chart);
  return out;
}

template <class F>
WildRep<F> chart_swap_matrix(const WildRep<F>& r) {
  require_nonzero_lambda(r.lambda);
  const Mat2<F>& m = r.m0;
  return {Mat2<F>{m.m22, -m.m21, -m.m12, m.m11}, -r.u2, -r.u1, F(1) / r.lambda};
}

template <class F>
WildRep<F> pure_braid_matrix(const WildRep<F>& r) {
  const Mat2<F> g = r.U1() * r.U2() * r.Mhat();
  return {sl2_inv(g) * r.m0 * g, r.u1, r.u2, r.lambda};
}

template <class F>
WildRep<F> pure_braid_matrix_inverse(const WildRep<F>& r) {
  const Mat2<F> g = r.U1() * r.U2() * r.Mhat();
  return {g * r.m0 * sl2_inv(g), r.u1, r.u2, r.lambda};
}

namespace {

// The pure braid is affine in (x, y) with fixed part
// (x, y) -> A (x, y) + b, A = [[c^2 - 1, c], [-c, -1]], det A = 1.
template <class F>
struct PureAffine {
  F c, k1, k2;
};

template <class F>
PureAffine<F> pure_affine(const WildPoint<F>& p) {
  require_nonzero_lambda(p.lambda);
  const F inv = F(1) / p.lambda;
  const F c = inv - p.lambda + p.lambda * p.s;
  const F k1 = p.s * p.t1 + p.lambda * p.t0 + inv * p.t0;
  const F k2 = p.s * p.t0 + p.lambda * p.t1 + inv * p.t1;
  return {c, k1, k2};
}

}  // namespace

template <class F>
WildPoint<F> pure_braid_coords(const WildPoint<F>& p) {
  const auto [c, k1, k2] = pure_affine(p);
  WildPoint<F> out = p;
  out.x = c * c * p.x + c * p.y - p.x - c * k1 + k2;
  out.y = -c * p.x - p.y + k1;
  return out;
}

template <class F>
WildPoint<F> pure_braid_coords_inverse(const WildPoint<F>& p) {
  const auto [c, k1, k2] = pure_affine(p);
  const F u = p.x - (k2 - c * k1);
  const F v = p.y - k1;
  WildPoint<F> out = p;
  out.x = -u - c * v;
  out.y = c * u + (c * c - F(1)) * v;
  return out;
}

namespace {

template <class F>
Mat2<F> weyl(const Mat2<F>& m) {
  // P m P^-1 with P = [[0,-1],[1,0]].
  return {m.m22, -m.m21, -m.m12, m.m11};
}

}  // namespace

template <class F>
WildTuple<F> weyl_conjugate(const WildTuple<F>& t) {
  return {weyl(t.m0), weyl(t.u1), weyl(t.u2), weyl(t.mhat)};
}

template <class F>
WildTuple<F> full_braid_tuple(const WildRep<F>& r) {
  const Mat2<F> u1 = r.U1();
  const Mat2<F> mhat = r.Mhat();
  return weyl_conjugate(
      WildTuple<F>{sl2_inv(u1) * r.m0 * u1, r.U2(), mhat * u1 * sl2_inv(mhat), mhat});
}

template <class F>
WildRep<F> full_braid_matrix(const WildRep<F>& r) {
  require_nonzero_lambda(r.lambda);
  const Mat2<F> u1 = r.U1();
  return {weyl(sl2_inv(u1) * r.m0 * u1), -r.u2, -(r.lambda * r.lambda) * r.u1, F(1) / r.lambda};
}

template <class F>
WildPoint<F> full_braid_coords(const WildPoint<F>& p) {
  const WildInvariants<F> v = invariants_from_point(p);
  const F& l = v.lambda;
  const F l2 = l * l;
  const F sm2 = p.s - F(2);
  WildPoint<F> out;
  out.lambda = F(1) / l;
  out.t0 = p.t0;
  out.t1 = p.t1;
  out.s = F(2) + l2 * sm2;
  out.x = p.t0 + v.u2b0 + sm2 * (v.a0 - v.d0) + l2 * sm2 * v.d0 + l2 * sm2 * v.u1c0 +
          l2 * v.u1c0 - sm2 * v.u1c0;
  out.y = l * v.a0 - (l - F(1) / l) * v.u1c0 + v.d0 / l;
  out.chart = other(p.chart);
  return out;
}

template <class F>
F printed_full_braid_x(const WildPoint<F>& p) {
  const WildInvariants<F> v = invariants_from_point(p);
  const F l2 = v.lambda * v.lambda;
  const F sm2 = p.s - F(2);
  return p.t0 + l2 * v.a0 * sm2 - l2 * sm2 * v.u1c0 + sm2 * (v.a0 - v.d0) - sm2 * v.u1c0 + v.u2b0;
}

template <class F>
FiberSplit<F> wild_fiber_coordinates(const WildPoint<F>& p) {
  return {{p.t0, p.t1, p.lambda}, {p.s, p.x, p.y}};
}

template <class F>
Representation<F> wild_to_groupoid(const WildRep<F>& r) {
  std::map<std::string, Mat2<F>> assignment;
  for (const GeneratorSpec& g : wild_presentation()->generators()) {
    assignment.emplace(g.name, Mat2<F>::identity());
  }
  const Mat2<F> inf = r.U1() * r.U2() * r.Mhat();
  assignment["g00"] = r.m0;
  assignment["ginfinf"] = inf;
  assignment["g11"] = sl2_inv(r.m0 * inf);
  assignment["alpha1"] = r.U1();
  assignment["alpha2"] = r.U2();
  assignment["betah2p"] = r.Mhat();
  return Representation<F>(wild_presentation(), std::move(assignment));
}

template <class F>
WildTuple<F> wild_tuple_from_groupoid(const Representation<F>& rep) {
  return {rep.at("g00"), rep.at("alpha1"), rep.at("alpha2"), rep.at("betah2p")};
}

template <class F>
WildRep<F> wild_from_groupoid(const Representation<F>& rep) {
  const WildTuple<F> t = wild_tuple_from_groupoid(rep);
  const F one(1);
  const bool upper = t.u1.m11 == one && t.u1.m22 == one && is_zero(t.u1.m21);
  const bool lower = t.u2.m11 == one && t.u2.m22 == one && is_zero(t.u2.m12);
  if (!upper || !lower) {
    throw Error(ErrorCode::invalid_presentation,
                "alpha1/alpha2 are not upper/lower unipotent; normalize first");
  }
  if (!t.mhat.is_diagonal()) throw Error(ErrorCode::not_diagonal, "betah2p is not diagonal");
  return {t.m0, t.u1.m12, t.u2.m21, t.mhat.m11};
}

WildRep<GaussRational> random_wild_rep(Rng& rng, const WildSampleOptions& options) {
  ExactMat m0 = random_exact_sl2(rng, options.bound, options.gaussian);
  auto draw = [&] {
    return options.gaussian ? random_gauss(rng, options.bound)
                            : random_rational(rng, options.bound);
  };
  GaussRational u1 = draw();
  GaussRational u2 = draw();
  GaussRational lambda = random_nonzero_rational(rng, options.bound);
  if (options.generic) {
    while (u1.is_zero()) u1 = draw();
    while (u2.is_zero()) u2 = draw();
    while (lambda == GaussRational(1) || lambda == GaussRational(-1)) {
      lambda = random_nonzero_rational(rng, options.bound);
    }
  }
  return {std::move(m0), std::move(u1), std::move(u2), std::move(lambda)};
}

GaugeAssignment<GaussRational> random_wild_gauge(Rng& rng, long bound) {
  GaugeAssignment<GaussRational> out;
  const PresentationPtr p = wild_presentation();
  for (const auto& o : p->objects()) {
    if (o == p->base_object()) continue;
    if (p->gauge_class(o) == GaugeClass::diagonal) {
      const GaussRational d = random_nonzero_rational(rng, bound);
      out.emplace(o, ExactMat::diagonal(d, d.inverse()));
    } else {
      out.emplace(o, random_exact_sl2(rng, bound));
    }
  }
  return out;
}

GaugeAssignment<GaussRational> random_tame_gauge(Rng& rng, long bound) {
  GaugeAssignment<GaussRational> out;
  const PresentationPtr p = tame_presentation();
  for (const auto& o : p->objects()) {
    if (o != p->base_object()) out.emplace(o, random_exact_sl2(rng, bound));
  }
  return out;
}

WildPoint<Complexd> to_float(const WildPoint<GaussRational>& p) {
  return {to_complex(p.lambda), to_complex(p.t0), to_complex(p.t1), to_complex(p.s),
          to_complex(p.x),      to_complex(p.y),  p.chart};
}

#define WILDCHAR_INSTANTIATE(F)                                                    \
  template WildPoint<F> wild_traces(const WildRep<F>&, Chart);                     \
  template F wild_residual(const WildPoint<F>&);                                   \
  template bool on_wild_surface(const WildPoint<F>&, double);                      \
  template F truncated_wild_residual(const WildPoint<F>&);                         \
  template F expanded_truncated_wild_cubic(const WildPoint<F>&);                   \
  template WildRep<F> wild_reconstruct(const WildPoint<F>&, double);               \
  template WildInvariants<F> invariants_from_point(const WildPoint<F>&);           \
  template WildInvariants<F> wild_equiv_invariants(const WildRep<F>&);             \
  template WildRep<F> conjugate_by_diagonal(const WildRep<F>&, const F&);          \
  template WildPoint<F> chart_swap(const WildPoint<F>&);                           \
  template WildRep<F> chart_swap_matrix(const WildRep<F>&);                        \
  template WildRep<F> pure_braid_matrix(const WildRep<F>&);                        \
  template WildRep<F> pure_braid_matrix_inverse(const WildRep<F>&);                \
  template WildPoint<F> pure_braid_coords(const WildPoint<F>&);                    \
  template WildPoint<F> pure_braid_coords_inverse(const WildPoint<F>&);            \
  template WildTuple<F> weyl_conjugate(const WildTuple<F>&);                       \
  template WildTuple<F> full_braid_tuple(const WildRep<F>&);                       \
  template WildRep<F> full_braid_matrix(const WildRep<F>&);                        \
  template WildPoint<F> full_braid_coords(const WildPoint<F>&);                    \
  template F printed_full_braid_x(const WildPoint<F>&);                            \
  template FiberSplit<F> wild_fiber_coordinates(const WildPoint<F>&);              \
  template Representation<F> wild_to_groupoid(const WildRep<F>&);                  \
  template WildTuple<F> wild_tuple_from_groupoid(const Representation<F>&);        \
  template WildRep<F> wild_from_groupoid(const Representation<F>&);

WILDCHAR_INSTANTIATE(GaussRational)
WILDCHAR_INSTANTIATE(Complexd)

#undef WILDCHAR_INSTANTIATE

}  // namespace wildchar
