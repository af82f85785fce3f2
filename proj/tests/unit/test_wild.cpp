#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "wildchar/wild.hpp"

namespace wildchar {
namespace {

using testing::mat;
using testing::q;
using testing::Q;

WildPoint<Q> wp(Q lambda, Q t0, Q t1, Q s, Q x, Q y, Chart c = Chart::plus) {
  return {std::move(lambda), std::move(t0), std::move(t1), std::move(s), std::move(x), std::move(y), c};
}

// Frozen from tests/oracles/matrix_oracle.py for M0=[[2,1],[3,2]], u1=1/2, u2=-3, lambda=3.
const WildPoint<Q> kGeneric = wp(q(3), q(4), q(-65, 6), q(1, 2), q(-1, 2), q(20, 3));

TEST(WildTraces, WorkedPoints) {
  EXPECT_EQ(wild_traces(testing::worked_wild_rep()), testing::worked_wild_point());
  const WildRep<Q> boundary{ExactMat::identity(), q(0), q(0), q(2)};
  EXPECT_EQ(wild_traces(boundary), wp(q(2), q(2), q(5, 2), q(2), q(2), q(5, 2)));
  EXPECT_EQ(wild_traces(testing::generic_wild_rep()), kGeneric);
  EXPECT_EQ(wild_traces(testing::generic_wild_rep(), Chart::minus).chart, Chart::minus);
}

TEST(WildResidual, VanishesOnImages) {
  EXPECT_EQ(wild_residual(testing::worked_wild_point()), Q(0));
  EXPECT_EQ(wild_residual(kGeneric), Q(0));
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto r = random_wild_rep(rng, {5, k % 2 == 0, k % 5 != 0});
    EXPECT_EQ(wild_residual(wild_traces(r)), Q(0));
  }
  auto off = kGeneric;
  off.t1 = off.t1 + Q(1);
  EXPECT_FALSE(on_wild_surface(off));
  EXPECT_TRUE(on_wild_surface(to_float(kGeneric)));
}

TEST(WildResidual, TruncatedFormDoesNotVanish) {
  // The shortened P, Q misses terms and is nonzero on genuine points.
  EXPECT_NE(truncated_wild_residual(testing::worked_wild_point()), Q(0));
  EXPECT_NE(truncated_wild_residual(kGeneric), Q(0));
  EXPECT_NE(expanded_truncated_wild_cubic(testing::worked_wild_point()), Q(0));
  EXPECT_NE(expanded_truncated_wild_cubic(kGeneric), Q(0));
}

TEST(Invariants, FromPointFrozen) {
  const WildInvariants<Q> expected{q(3), q(-3, 2), q(3, 2), q(-3), q(2), q(2)};
  EXPECT_EQ(wild_equiv_invariants(testing::generic_wild_rep()), expected);
  EXPECT_EQ(invariants_from_point(kGeneric), expected);
  const WildInvariants<Q> worked{q(2), q(1), q(0), q(0), q(1), q(1)};
  EXPECT_EQ(invariants_from_point(testing::worked_wild_point()), worked);
}

TEST(Invariants, DiagonalConjugationPreservesThem) {
  const auto r = testing::generic_wild_rep();
  const auto c = conjugate_by_diagonal(r, q(5, 3));
  EXPECT_EQ(wild_equiv_invariants(c), wild_equiv_invariants(r));
  EXPECT_EQ(wild_traces(c), wild_traces(r));
  EXPECT_NE(c, r);
}

TEST(Reconstruct, WorkedPoint) {
  EXPECT_EQ(wild_reconstruct(testing::worked_wild_point()), testing::worked_wild_rep());
}

TEST(Reconstruct, RoundTrips) {
  Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    const auto r = random_wild_rep(rng, {5, k % 2 == 1, true});
    const auto p = wild_traces(r);
    const auto back = wild_reconstruct(p);
    EXPECT_EQ(wild_traces(back), p);
    EXPECT_EQ(back.u1, Q(1));
    EXPECT_EQ(wild_equiv_invariants(back), wild_equiv_invariants(r));
  }
}

TEST(Reconstruct, Gates) {
  EXPECT_WILDCHAR_ERROR(wild_reconstruct(wp(q(2), q(2), q(5, 2), q(2), q(2), q(5, 2))),
                        ErrorCode::boundary_point_s2);
  EXPECT_WILDCHAR_ERROR(wild_reconstruct(wp(q(1), q(2), q(2), q(3), q(3), q(2))),
                        ErrorCode::resonant_lambda);
  EXPECT_WILDCHAR_ERROR(wild_reconstruct(wp(q(-1), q(2), q(2), q(3), q(3), q(2))),
                        ErrorCode::resonant_lambda);
  EXPECT_WILDCHAR_ERROR(invariants_from_point(wp(q(0), q(2), q(2), q(3), q(3), q(2))),
                        ErrorCode::zero_lambda);
  auto off = kGeneric;
  off.x = off.x + Q(1);
  EXPECT_WILDCHAR_ERROR(wild_reconstruct(off), ErrorCode::off_surface);
}

TEST(ChartSwap, WorkedPoint) {
  const auto swapped = chart_swap(testing::worked_wild_point());
  EXPECT_EQ(swapped, wp(q(1, 2), q(2), q(3), q(3), q(3), q(5, 2), Chart::minus));
  EXPECT_EQ(wild_residual(swapped), Q(0));
  EXPECT_EQ(chart_swap(swapped), testing::worked_wild_point());
}

TEST(ChartSwap, GenericMatchesMatrixForm) {
  const auto r = testing::generic_wild_rep();
  const auto m = chart_swap_matrix(r);
  EXPECT_EQ(m, (WildRep<Q>{mat(2, -3, -1, 2), q(3), q(-1, 2), q(1, 3)}));
  EXPECT_EQ(wild_traces(m), wp(q(1, 3), q(4), q(-17, 6), q(1, 2), q(-1, 2), q(20, 3)));
  EXPECT_EQ(chart_swap(kGeneric), wild_traces(m, Chart::minus));
  EXPECT_EQ(chart_swap_matrix(m), r);
}

TEST(PureBraid, Frozen) {
  const auto r = testing::generic_wild_rep();
  EXPECT_EQ(pure_braid_coords(kGeneric), wp(q(3), q(4), q(-65, 6), q(1, 2), q(-197, 6), q(2, 3)));
  EXPECT_EQ(wild_traces(pure_braid_matrix(r)), pure_braid_coords(kGeneric));
  EXPECT_EQ(pure_braid_matrix_inverse(pure_braid_matrix(r)), r);
  EXPECT_EQ(pure_braid_coords_inverse(pure_braid_coords(kGeneric)), kGeneric);
  // M0 = I is central, so the worked point is fixed.
  EXPECT_EQ(pure_braid_coords(testing::worked_wild_point()), testing::worked_wild_point());
}

TEST(FullBraid, WorkedTuple) {
  const auto t = full_braid_tuple(testing::worked_wild_rep());
  EXPECT_EQ(t.m0, ExactMat::identity());
  EXPECT_EQ(t.u1, mat(1, -1, 0, 1));
  EXPECT_EQ(t.u2, mat(1, 0, -4, 1));
  EXPECT_EQ(t.mhat, ExactMat::diagonal(q(1, 2), q(2)));
  EXPECT_EQ(as_tuple(full_braid_matrix(testing::worked_wild_rep())), t);
}

TEST(FullBraid, WorkedCoordinates) {
  const auto once = full_braid_coords(testing::worked_wild_point());
  EXPECT_EQ(once, wp(q(1, 2), q(2), q(9, 2), q(6), q(6), q(5, 2), Chart::minus));
  const auto twice = full_braid_coords(once);
  EXPECT_EQ(twice.s, q(3));
  EXPECT_EQ(twice, pure_braid_coords(testing::worked_wild_point()));
}

TEST(FullBraid, GenericFrozen) {
  const auto r = testing::generic_wild_rep();
  const auto t = full_braid_tuple(r);
  EXPECT_EQ(t.m0, mat(q(7, 2), -3, q(-1, 4), q(1, 2)));
  EXPECT_EQ(t.u1, mat(1, 3, 0, 1));
  EXPECT_EQ(t.u2, mat(1, 0, q(-9, 2), 1));
  EXPECT_EQ(t.mhat, ExactMat::diagonal(q(1, 3), q(3)));
  const auto expected = wp(q(1, 3), q(4), q(-65, 6), q(-23, 2), q(-61, 2), q(8, 3), Chart::minus);
  EXPECT_EQ(full_braid_coords(kGeneric), expected);
  EXPECT_EQ(wild_traces(full_braid_matrix(r), Chart::minus), expected);
}

TEST(FullBraid, SquareIsPure) {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const auto r = random_wild_rep(rng, {5, k % 2 == 0, true});
    const auto p = wild_traces(r);
    EXPECT_EQ(full_braid_coords(full_braid_coords(p)), pure_braid_coords(p));
    EXPECT_EQ(full_braid_coords(p), wild_traces(full_braid_matrix(r), Chart::minus));
  }
}

TEST(FullBraid, PrintedXDisagreesWithMatrices) {
  // The published closed form drops a lambda^2 u1c0 term; it agrees only when u1c0 = 0.
  EXPECT_NE(printed_full_braid_x(kGeneric), full_braid_coords(kGeneric).x);
  EXPECT_EQ(printed_full_braid_x(testing::worked_wild_point()),
            full_braid_coords(testing::worked_wild_point()).x);
}

TEST(FiberSplit, Coordinates) {
  const auto f = wild_fiber_coordinates(kGeneric);
  EXPECT_EQ(f.local, (std::array<Q, 3>{q(4), q(-65, 6), q(3)}));
  EXPECT_EQ(f.fiber, (std::array<Q, 3>{q(1, 2), q(-1, 2), q(20, 3)}));
}

TEST(Groupoid, WildRoundTrip) {
  const auto r = testing::generic_wild_rep();
  const auto rep = wild_to_groupoid(r);
  EXPECT_TRUE(satisfies_relations(rep));
  EXPECT_EQ(wild_from_groupoid(rep), r);
  EXPECT_EQ(evaluate(rep, wild_presentation()->named_word("formal_loop")), r.Mhat());
}

TEST(Chart, Names) {
  EXPECT_EQ(parse_chart(chart_name(Chart::minus)), Chart::minus);
  EXPECT_EQ(other(Chart::plus), Chart::minus);
  EXPECT_WILDCHAR_ERROR(parse_chart("sideways"), ErrorCode::parse_error);
}

}  // namespace
}  // namespace wildchar
