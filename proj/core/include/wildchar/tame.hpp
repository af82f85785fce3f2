#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wildchar/groupoid.hpp"
#include "wildchar/mat2.hpp"
#include "wildchar/sampling.hpp"

namespace wildchar {

/// Loop matrices (M1, M2, M3) of a normalized tame representation.
/// M4 closes the interior relation: M1 M2 M3 M4 = I.
template <class F>
struct TameTriple {
  Mat2<F> m1, m2, m3;

  Mat2<F> m4() const { return mat_inv(m1 * m2 * m3); }
  friend bool operator==(const TameTriple&, const TameTriple&) = default;
};

/// Fricke coordinates a_i = tr M_i, x_ij = tr(M_i M_j). x31 doubles as x13.
template <class F>
struct TamePoint {
  F a1, a2, a3, a4, x12, x23, x31;

  std::array<F, 7> coords() const { return {a1, a2, a3, a4, x12, x23, x31}; }
  friend bool operator==(const TamePoint&, const TamePoint&) = default;
};

/// Invariants of a triple with M1 = diag(alpha1, 1/alpha1) under diagonal
/// conjugation.
template <class F>
struct TripleInvariants {
  F alpha1, alpha2, delta2, alpha3, delta3, b2g3, g2b3;
  friend bool operator==(const TripleInvariants&, const TripleInvariants&) = default;
};

template <class F>
TamePoint<F> tame_traces(const TameTriple<F>& t);

/// P = x123 + x132 and Q = x123 * x132 as polynomials in the other six traces.
template <class F>
std::pair<F, F> fricke_pq(const TamePoint<F>& p);

/// a4^2 - P a4 + Q.
template <class F>
F fricke_residual(const TamePoint<F>& p);

/// Float backend: |residual| <= tol * max(1, |a4|^2, |P a4|, |Q|), so the
/// test scales with the size of the terms. Exact backend: residual == 0.
template <class F>
bool on_fricke_surface(const TamePoint<F>& p, double tol = 1e-9);

/// (tr(M1 M2 M1^-1 M3), tr(M1 M2 M1 M2^-1 M1^-1 M3)) computed from matrices.
template <class F>
std::pair<F, F> extended_traces(const TameTriple<F>& t);

/// The same two traces as polynomials in the Fricke coordinates.
template <class F>
std::pair<F, F> extended_traces_formula(const TamePoint<F>& p);

/// Rebuilds a triple with M1 = diag(alpha1, 1/alpha1). alpha1 must be a root
/// of X^2 - a1 X + 1 with a1 != +-2, and p must lie on the surface.
template <class F>
TameTriple<F> tame_reconstruct(const TamePoint<F>& p, const F& alpha1, double tol = 1e-9);

/// Float convenience: picks the root with |alpha1| >= 1 (ties: Im >= 0).
TameTriple<Complexd> tame_reconstruct_float(const TamePoint<Complexd>& p, double tol = 1e-9);
Complexd principal_eigenvalue(const Complexd& trace);

template <class F>
TripleInvariants<F> triple_invariants(const TameTriple<F>& t);

/// h_i on matrices. i = 1: (M1, M2, (M1 M2)^-1 M3 (M1 M2)); i = 2, 3 apply
/// the same rule to the cyclically relabeled triple.
template <class F>
TameTriple<F> braid_matrix_action(int i, const TameTriple<F>& t);
template <class F>
TameTriple<F> braid_matrix_action_inverse(int i, const TameTriple<F>& t);

/// h_i on Fricke coordinates.
template <class F>
TamePoint<F> braid_coord_action(int i, const TamePoint<F>& p);
template <class F>
TamePoint<F> braid_coord_action_inverse(int i, const TamePoint<F>& p);

/// Normalized tame representation: tree generators and g41 are I.
template <class F>
Representation<F> tame_to_groupoid(const TameTriple<F>& t);
template <class F>
TameTriple<F> tame_from_groupoid(const Representation<F>& rep);

TameTriple<GaussRational> random_tame_triple(Rng& rng, long bound = 5, bool gaussian = false);

/// Triple whose M1 has the rational eigenvalue alpha1 (alpha1 != 0, +-1).
TameTriple<GaussRational> random_tame_triple_with_eigenvalue(Rng& rng,
                                                             const GaussRational& alpha1,
                                                             long bound = 5);

inline TameTriple<Complexd> to_float(const TameTriple<GaussRational>& t) {
  return {to_float(t.m1), to_float(t.m2), to_float(t.m3)};
}
TamePoint<Complexd> to_float(const TamePoint<GaussRational>& p);

/// Outcome of testing one ordered composite of h1, h2, h3.
struct CompositeReport {
  std::string order;       // e.g. "h1 h2 h3" (applied left to right)
  bool inverses = false;   // composite of the inverse actions
  bool identity = false;   // traces fixed on every sample
  int samples = 0;
};

/// Tests all orders of h1 h2 h3 (and of their inverses) on random exact
/// triples; a composite counts as the identity when it fixes all seven
/// traces, i.e. acts trivially up to global conjugation.
std::vector<CompositeReport> tame_composite_diagnostic(std::uint64_t seed, int samples);

}  // namespace wildchar
