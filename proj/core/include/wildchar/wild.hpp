#pragma once

#include <array>
#include <string_view>

#include "wildchar/groupoid.hpp"
#include "wildchar/mat2.hpp"
#include "wildchar/sampling.hpp"

namespace wildchar {

/// Which of the two eigenvalue orderings (+-Lambda_0) a point refers to.
/// Purely bookkeeping: the defining cubic has the same form in both charts.
enum class Chart { plus, minus };

std::string_view chart_name(Chart c);
Chart parse_chart(std::string_view text);
inline Chart other(Chart c) { return c == Chart::plus ? Chart::minus : Chart::plus; }

/// Normalized wild data (M0, U1, U2, Mhat) with U1 upper unipotent, U2 lower
/// unipotent and Mhat = diag(lambda, 1/lambda), relative to the rep's own
/// lambda.
template <class F>
struct WildRep {
  Mat2<F> m0;
  F u1, u2, lambda;

  Mat2<F> U1() const { return Mat2<F>::upper_unipotent(u1); }
  Mat2<F> U2() const { return Mat2<F>::lower_unipotent(u2); }
  Mat2<F> Mhat() const { return Mat2<F>::diagonal(lambda, F(1) / lambda); }
  /// Closes M0 U1 U2 Mhat M1 = I.
  Mat2<F> M1() const { return sl2_inv(m0 * U1() * U2() * Mhat()); }

  friend bool operator==(const WildRep&, const WildRep&) = default;
};

/// Coordinates (lambda, t0, t1, s, x, y):
/// t0 = tr M0, t1 = tr M1, s = tr(U1 U2), x = tr(M0 U1 U2), y = tr(M0 Mhat).
template <class F>
struct WildPoint {
  F lambda, t0, t1, s, x, y;
  Chart chart = Chart::plus;

  std::array<F, 6> coords() const { return {lambda, t0, t1, s, x, y}; }
  friend bool operator==(const WildPoint&, const WildPoint&) = default;
};

template <class F>
struct WildInvariants {
  F lambda, u1u2, u1c0, u2b0, a0, d0;
  friend bool operator==(const WildInvariants&, const WildInvariants&) = default;
};

/// (M0', U1', U2', Mhat') as plain matrices.
template <class F>
struct WildTuple {
  Mat2<F> m0, u1, u2, mhat;
  friend bool operator==(const WildTuple&, const WildTuple&) = default;
};

template <class F>
WildTuple<F> as_tuple(const WildRep<F>& r) {
  return {r.m0, r.U1(), r.U2(), r.Mhat()};
}

template <class F>
WildPoint<F> wild_traces(const WildRep<F>& r, Chart chart = Chart::plus);

/// Fricke relation of the triple (M0, U1 U2, Mhat):
/// a1 = t0, a2 = s, a3 = lambda + 1/lambda, x12 = x,
/// x23 = 1/lambda - lambda + lambda s, x31 = y, a4 = t1.
template <class F>
F wild_residual(const WildPoint<F>& p);

/// Surface test with the same term-size scaling as on_fricke_surface.
template <class F>
bool on_wild_surface(const WildPoint<F>& p, double tol = 1e-9);

/// The shortened P and Q sometimes quoted for this cubic (without the
/// -t0 s (lambda + 1/lambda) term in P and without the cross terms and the
/// constant in Q). Kept only to show that it does not vanish on genuine
/// points; do not use it as a surface test.
template <class F>
F truncated_wild_residual(const WildPoint<F>& p);

/// The expanded cubic displayed next to that P and Q. It is not an expansion
/// of either residual and likewise fails on genuine points.
template <class F>
F expanded_truncated_wild_cubic(const WildPoint<F>& p);

/// Inverts wild_traces on lambda != 0, +-1, s != 2, residual 0. Canonical
/// representative: u1 = 1.
template <class F>
WildRep<F> wild_reconstruct(const WildPoint<F>& p, double tol = 1e-9);

/// (lambda, u1u2, u1c0, u2b0, a0, d0) solved from coordinates; needs
/// lambda != 0, +-1 only.
template <class F>
WildInvariants<F> invariants_from_point(const WildPoint<F>& p);

template <class F>
WildInvariants<F> wild_equiv_invariants(const WildRep<F>& r);

/// Conjugation by diag(alpha, 1/alpha).
template <class F>
WildRep<F> conjugate_by_diagonal(const WildRep<F>& r, const F& alpha);

/// Change of chart lambda -> 1/lambda; s, y, t0 fixed. Involution.
template <class F>
WildPoint<F> chart_swap(const WildPoint<F>& p);

/// Matrix form of chart_swap: conjugation by P = [[0,-1],[1,0]] with the two
/// Stokes factors exchanged. M0' = (M0^-1)^t, u1' = -u2, u2' = -u1.
template <class F>
WildRep<F> chart_swap_matrix(const WildRep<F>& r);

/// M0 -> (U1 U2 Mhat)^-1 M0 (U1 U2 Mhat).
template <class F>
WildRep<F> pure_braid_matrix(const WildRep<F>& r);
template <class F>
WildRep<F> pure_braid_matrix_inverse(const WildRep<F>& r);

/// Coordinate form of the pure braid; lambda, t0, t1, s fixed.
template <class F>
WildPoint<F> pure_braid_coords(const WildPoint<F>& p);
template <class F>
WildPoint<F> pure_braid_coords_inverse(const WildPoint<F>& p);

/// Full braid followed by the return to the standard chart, as four
/// matrices: (P U1^-1 M0 U1 P^-1, P U2 P^-1, P Mhat U1 Mhat^-1 P^-1, P Mhat P^-1).
template <class F>
WildTuple<F> full_braid_tuple(const WildRep<F>& r);

/// The same as a WildRep: lambda' = 1/lambda, u1' = -u2, u2' = -lambda^2 u1.
template <class F>
WildRep<F> full_braid_matrix(const WildRep<F>& r);

/// Coordinate form of the full braid; needs lambda != 0, +-1. Toggles the chart.
template <class F>
WildPoint<F> full_braid_coords(const WildPoint<F>& p);

/// A previously published closed form of x' for the full braid. It disagrees with the
/// matrix action by a lambda^2 u1c0 term in the slot order used there; kept
/// for the regression test only.
template <class F>
F printed_full_braid_x(const WildPoint<F>& p);

template <class F>
struct FiberSplit {
  std::array<F, 3> local;  // (t0, t1, lambda)
  std::array<F, 3> fiber;  // (s, x, y)
};

template <class F>
FiberSplit<F> wild_fiber_coordinates(const WildPoint<F>& p);

/// Normalized wild groupoid representation carrying r.
template <class F>
Representation<F> wild_to_groupoid(const WildRep<F>& r);
/// Reads (g00, alpha1, alpha2, betah2p) of a normalized representation.
template <class F>
WildTuple<F> wild_tuple_from_groupoid(const Representation<F>& rep);
/// Same, requiring the standard shapes (upper, lower, diagonal).
template <class F>
WildRep<F> wild_from_groupoid(const Representation<F>& rep);
/// Conjugation of each entry of a tuple by P = [[0,-1],[1,0]].
template <class F>
WildTuple<F> weyl_conjugate(const WildTuple<F>& t);

struct WildSampleOptions {
  long bound = 5;
  bool gaussian = false;
  /// Keep lambda away from 0 and +-1 and u1 u2 away from 0.
  bool generic = true;
};

WildRep<GaussRational> random_wild_rep(Rng& rng, const WildSampleOptions& options = {});

/// Random gauge respecting the wild presentation's constraints, identity at
/// the base object.
GaugeAssignment<GaussRational> random_wild_gauge(Rng& rng, long bound = 4);
GaugeAssignment<GaussRational> random_tame_gauge(Rng& rng, long bound = 4);

inline WildRep<Complexd> to_float(const WildRep<GaussRational>& r) {
  return {to_float(r.m0), to_complex(r.u1), to_complex(r.u2), to_complex(r.lambda)};
}
WildPoint<Complexd> to_float(const WildPoint<GaussRational>& p);

}  // namespace wildchar
