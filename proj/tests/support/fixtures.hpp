#pragma once

#include <gtest/gtest.h>

#include "wildchar/errors.hpp"
#include "wildchar/scalar.hpp"
#include "wildchar/tame.hpp"
#include "wildchar/wild.hpp"

namespace wildchar::testing {

using Q = GaussRational;

inline Q q(long num, long den = 1) { return Q::fraction(num, den); }

inline ExactMat mat(Q a, Q b, Q c, Q d) { return {std::move(a), std::move(b), std::move(c), std::move(d)}; }

/// (lambda=2, t0=2, t1=9/2, s=3, x=3, y=5/2): traces of M0=I, u1=u2=1, lambda=2.
inline WildPoint<Q> worked_wild_point() { return {q(2), q(2), q(9, 2), q(3), q(3), q(5, 2)}; }
inline WildRep<Q> worked_wild_rep() { return {ExactMat::identity(), q(1), q(1), q(2)}; }

/// Generic rep with nontrivial M0; its images are frozen from the sympy oracle.
inline WildRep<Q> generic_wild_rep() { return {mat(2, 1, 3, 2), q(1, 2), q(-3), q(3)}; }

/// (a=(2,2,4,8), x=(3,6,5)) from the triple (upper, lower, [[1,2],[1,3]]).
inline TameTriple<Q> worked_tame_triple() {
  return {mat(1, 1, 0, 1), mat(1, 0, 1, 1), mat(1, 2, 1, 3)};
}
inline TameTriple<Q> generic_tame_triple() {
  return {mat(2, 1, 1, 1), mat(1, 2, 0, 1), mat(3, -1, 1, 0)};
}

/// Asserts that `stmt` throws wildchar::Error with the given code.
#define EXPECT_WILDCHAR_ERROR(stmt, expected)                          \
  do {                                                                 \
    try {                                                              \
      (void)(stmt);                                                    \
      ADD_FAILURE() << "expected " << ::wildchar::error_code_name(expected); \
    } catch (const ::wildchar::Error& e) {                             \
      EXPECT_EQ(e.code(), expected) << e.what();                       \
    }                                                                  \
  } while (0)

}  // namespace wildchar::testing
