#pragma once

#include <cmath>
#include <span>
#include <string>

#include "wildchar/errors.hpp"
#include "wildchar/scalar.hpp"

namespace wildchar {

/// 2x2 matrix over a scalar field F (GaussRational or Complexd).
template <class F>
struct Mat2 {
  F m11{1}, m12{0}, m21{0}, m22{1};

  static Mat2 identity() { return {F(1), F(0), F(0), F(1)}; }
  static Mat2 diagonal(const F& a, const F& d) { return {a, F(0), F(0), d}; }
  static Mat2 upper_unipotent(const F& u) { return {F(1), u, F(0), F(1)}; }
  static Mat2 lower_unipotent(const F& u) { return {F(1), F(0), u, F(1)}; }

  F det() const { return m11 * m22 - m12 * m21; }
  F trace() const { return m11 + m22; }
  Mat2 adjugate() const { return {m22, -m12, -m21, m11}; }
  Mat2 transposed() const { return {m11, m21, m12, m22}; }
  bool is_diagonal() const { return is_zero(m12) && is_zero(m21); }
  bool is_identity() const { return *this == identity(); }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
  }
  friend Mat2 operator*(const F& k, const Mat2& a) {
    return {k * a.m11, k * a.m12, k * a.m21, k * a.m22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

using ExactMat = Mat2<GaussRational>;
using FloatMat = Mat2<Complexd>;

template <class F>
Mat2<F> mat_mul(const Mat2<F>& a, const Mat2<F>& b) {
  return a * b;
}

/// General inverse. SL2 input takes the adjugate path (no division).
template <class F>
Mat2<F> mat_inv(const Mat2<F>& a) {
  const F d = a.det();
  if (d == F(1)) return a.adjugate();
  if (is_zero(d)) throw Error(ErrorCode::singular_matrix, "matrix is singular");
  const F k = F(1) / d;
  return k * a.adjugate();
}

/// Inverse of a matrix the caller knows lies in SL2.
template <class F>
Mat2<F> sl2_inv(const Mat2<F>& a) {
  return a.adjugate();
}

/// det == 1 exactly, or |det - 1| <= tol on the float backend.
template <class F>
bool is_sl2(const Mat2<F>& a, double tol = 1e-9) {
  return nearly_zero(a.det() - F(1), tol);
}

template <class F>
double max_entry_distance(const Mat2<F>& a, const Mat2<F>& b) {
  double out = 0.0;
  out = std::max(out, magnitude(a.m11 - b.m11));
  out = std::max(out, magnitude(a.m12 - b.m12));
  out = std::max(out, magnitude(a.m21 - b.m21));
  out = std::max(out, magnitude(a.m22 - b.m22));
  return out;
}

template <class F>
bool nearly_identity(const Mat2<F>& a, double tol) {
  return max_entry_distance(a, Mat2<F>::identity()) <= tol;
}

inline FloatMat to_float(const ExactMat& a) {
  return {to_complex(a.m11), to_complex(a.m12), to_complex(a.m21), to_complex(a.m22)};
}
inline FloatMat to_float(const FloatMat& a) { return a; }

template <class F>
std::string format_matrix(const Mat2<F>& a) {
  return "[[" + format_scalar(a.m11) + "," + format_scalar(a.m12) + "],[" +
         format_scalar(a.m21) + "," + format_scalar(a.m22) + "]]";
}

/// One letter of an indexed word: assignment[index]^exponent, exponent = +-1.
struct WordStep {
  int index = 0;
  int exponent = 1;
};

/// Left-to-right product of the word's letters.
template <class F>
Mat2<F> evaluate_word(std::span<const WordStep> word, std::span<const Mat2<F>> assignment) {
  Mat2<F> out = Mat2<F>::identity();
  for (const WordStep& step : word) {
    if (step.index < 0 || static_cast<std::size_t>(step.index) >= assignment.size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "word index " + std::to_string(step.index) + " outside assignment of size " +
                      std::to_string(assignment.size()));
    }
    if (step.exponent != 1 && step.exponent != -1) {
      throw Error(ErrorCode::malformed_word, "exponent must be +1 or -1");
    }
    const Mat2<F>& m = assignment[static_cast<std::size_t>(step.index)];
    out = out * (step.exponent == 1 ? m : mat_inv(m));
  }
  return out;
}

template <class F>
F trace_of_word(std::span<const WordStep> word, std::span<const Mat2<F>> assignment) {
  return evaluate_word(word, assignment).trace();
}

}  // namespace wildchar
