#include <gtest/gtest.h>

#include <array>
#include <unordered_set>
#include <vector>

#include "fixtures.hpp"
#include "wildchar/mat2.hpp"
#include "wildchar/sampling.hpp"

namespace wildchar {
namespace {

using testing::mat;
using testing::q;
using testing::Q;

TEST(GaussRational, FractionsAreReduced) {
  EXPECT_EQ(q(2, 4), q(1, 2));
  EXPECT_EQ(q(3, -6), q(-1, 2));
  EXPECT_EQ(q(6, 3), Q(2));
}

TEST(GaussRational, FieldArithmetic) {
  const Q i = Q::imaginary_unit();
  EXPECT_EQ(i * i, Q(-1));
  const Q z(mpq_class(1, 2), mpq_class(3));
  EXPECT_EQ(z * z.inverse(), Q(1));
  EXPECT_EQ(z / z, Q(1));
  EXPECT_EQ(z * z.conj(), Q(mpq_class(37, 4)));
  EXPECT_EQ((z + i) - i, z);
  EXPECT_TRUE(Q(0).is_zero());
  EXPECT_FALSE(i.is_real());
}

TEST(GaussRational, DivisionByZeroThrows) {
  EXPECT_WILDCHAR_ERROR(Q(0).inverse(), ErrorCode::division_by_zero);
  EXPECT_WILDCHAR_ERROR(Q(1) / Q(0), ErrorCode::division_by_zero);
  EXPECT_WILDCHAR_ERROR(Q::fraction(1, 0), ErrorCode::division_by_zero);
}

TEST(GaussRational, FormatAndParseRoundTrip) {
  EXPECT_EQ(format_scalar(q(3)), "3");
  EXPECT_EQ(format_scalar(q(-7, 2)), "-7/2");
  EXPECT_EQ(format_scalar(Q::imaginary_unit()), "0+1*i");
  const Q z(mpq_class(3), mpq_class(1, 2));
  EXPECT_EQ(format_scalar(z), "3+1/2*i");
  for (const char* text : {"0", "5/2", "-1/3", "2+1/2*i", "-3/4-5*i", "0+1*i", "0-2/7*i"}) {
    EXPECT_EQ(format_scalar(parse_exact(text)), text) << text;
  }
  EXPECT_EQ(parse_exact("4/2"), Q(2));
}

TEST(GaussRational, ParseRejectsGarbage) {
  for (const char* text : {"", "abc", "1/", "1/0", "2+", "3**i", "1.5"}) {
    EXPECT_WILDCHAR_ERROR(parse_exact(text), ErrorCode::parse_error);
  }
}

TEST(GaussRational, HashIsCanonical) {
  EXPECT_EQ(scalar_hash(q(2, 4)), scalar_hash(q(1, 2)));
  std::unordered_set<Q> set{q(1, 2), q(2, 4), q(1, 3)};
  EXPECT_EQ(set.size(), 2U);
}

TEST(FloatScalar, FormatIsShortestRoundTrip) {
  const Complexd z(0.1, -2.5);
  EXPECT_EQ(parse_float(format_scalar(z)), z);
  EXPECT_EQ(format_scalar(Complexd(3.0, 0.0)), "3");
}

TEST(Scalar, LiteralsAdoptOtherBackend) {
  const Scalar exact(q(1, 2));
  const Scalar flt(Complexd(0.5, 0.0));
  EXPECT_EQ((exact + 1).backend(), Backend::exact);
  EXPECT_EQ((exact + 1).exact(), q(3, 2));
  EXPECT_EQ((2 * flt).backend(), Backend::floating);
  EXPECT_EQ((2 * flt).floating(), Complexd(1.0, 0.0));
  EXPECT_TRUE(Scalar(3).is_literal());
}

TEST(Scalar, MixingBackendsThrows) {
  const Scalar exact(q(1, 2));
  const Scalar flt(Complexd(0.5, 0.0));
  EXPECT_WILDCHAR_ERROR(exact + flt, ErrorCode::backend_mismatch);
  EXPECT_WILDCHAR_ERROR(exact * flt, ErrorCode::backend_mismatch);
  EXPECT_WILDCHAR_ERROR(flt.exact(), ErrorCode::backend_mismatch);
}

TEST(Scalar, ParseByBackend) {
  EXPECT_EQ(Scalar::parse("5/2", Backend::exact).exact(), q(5, 2));
  EXPECT_EQ(Scalar::parse("2.5", Backend::floating).floating(), Complexd(2.5, 0.0));
  EXPECT_EQ(parse_backend("float"), Backend::floating);
  EXPECT_EQ(parse_backend("exact"), Backend::exact);
  EXPECT_WILDCHAR_ERROR(parse_backend("double"), ErrorCode::parse_error);
}

TEST(Mat2, InverseAndDeterminant) {
  const ExactMat m = mat(2, 1, 1, 1);
  EXPECT_EQ(m.det(), Q(1));
  EXPECT_EQ(m * mat_inv(m), ExactMat::identity());
  EXPECT_EQ(sl2_inv(m), m.adjugate());
  const ExactMat g = mat(2, 0, 0, 3);
  EXPECT_EQ(mat_inv(g), mat(q(1, 2), 0, 0, q(1, 3)));
  EXPECT_WILDCHAR_ERROR(mat_inv(mat(1, 2, 2, 4)), ErrorCode::singular_matrix);
}

TEST(Mat2, TraceIsCyclic) {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const ExactMat a = random_exact_sl2(rng, 5, true);
    const ExactMat b = random_exact_sl2(rng, 5, true);
    const ExactMat c = random_exact_sl2(rng, 5, true);
    EXPECT_EQ((a * b * c).trace(), (c * a * b).trace());
    EXPECT_EQ((a * b).trace() + (a * mat_inv(b)).trace(), a.trace() * b.trace());
  }
}

TEST(Mat2, WordEvaluation) {
  const std::array<ExactMat, 2> gens{mat(1, 1, 0, 1), mat(1, 0, 1, 1)};
  const std::vector<WordStep> word{{0, 1}, {1, 1}, {0, -1}};
  EXPECT_EQ(evaluate_word<Q>(word, gens), gens[0] * gens[1] * mat_inv(gens[0]));
  EXPECT_EQ(trace_of_word<Q>(word, gens), Q(2));
  const std::vector<WordStep> bad{{2, 1}};
  EXPECT_WILDCHAR_ERROR(evaluate_word<Q>(bad, gens), ErrorCode::index_out_of_range);
}

TEST(Mat2, FloatToleranceHelpers) {
  const FloatMat m = to_float(mat(2, 1, 1, 1));
  EXPECT_TRUE(is_sl2(m));
  EXPECT_TRUE(nearly_identity(m * sl2_inv(m), 1e-12));
  EXPECT_DOUBLE_EQ(max_entry_distance(m, FloatMat::identity()), 1.0);
}

TEST(Sampling, SeedDeterminesSamples) {
  EXPECT_EQ(random_sl2(42, 10), random_sl2(42, 10));
  Rng a(9);
  Rng b(9);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(random_exact_sl2(a, 5, true), random_exact_sl2(b, 5, true));
}

TEST(Sampling, SamplesAreSl2AndBounded) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const ExactMat m = random_sl2(rng, 10, 6);
    EXPECT_EQ(m.det(), Q(1));
    for (const Q& e : {m.m11, m.m12, m.m21, m.m22}) EXPECT_LE(magnitude(e), 10.0);
    EXPECT_EQ(random_exact_sl2(rng, 5, true).det(), Q(1));
  }
}

TEST(Sampling, PrescribedEigenvalue) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const ExactMat m = random_sl2_with_eigenvalue(rng, q(3));
    EXPECT_EQ(m.det(), Q(1));
    EXPECT_EQ(m.trace(), q(10, 3));
  }
}

}  // namespace
}  // namespace wildchar
