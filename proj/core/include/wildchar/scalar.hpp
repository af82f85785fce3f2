#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "wildchar/errors.hpp"

namespace wildchar {

enum class Backend { exact, floating };

std::string_view backend_name(Backend backend);
Backend parse_backend(std::string_view text);

/// An element of Q(i). Both parts are kept as canonical GMP rationals
/// (reduced, positive denominator), so equality is structural and values
/// can be hashed.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long value) : re_(value), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im);
  explicit GaussRational(mpq_class re) : GaussRational(std::move(re), mpq_class(0)) {}

  /// num/den as a real value; den must be nonzero.
  static GaussRational fraction(long num, long den);
  static GaussRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// Multiplicative inverse; throws Error(division_by_zero) on zero.
  GaussRational inverse() const;
  GaussRational conj() const { return {re_, -im_}; }

  GaussRational& operator+=(const GaussRational& other);
  GaussRational& operator-=(const GaussRational& other);
  GaussRational& operator*=(const GaussRational& other);
  GaussRational& operator/=(const GaussRational& other);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::size_t hash() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Complexd = std::complex<double>;

/// Shared arithmetic surface of the two scalar backends.
template <class F>
concept Field = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  F(1);
};

// Per-backend helpers. Generic code calls these unqualified.
inline bool is_zero(const GaussRational& x) { return x.is_zero(); }
inline bool is_zero(const Complexd& x) { return x == Complexd(0.0, 0.0); }

/// Exact backend: exact zero test. Float backend: |x| <= tol.
inline bool nearly_zero(const GaussRational& x, double /*tol*/) { return x.is_zero(); }
inline bool nearly_zero(const Complexd& x, double tol) { return std::abs(x) <= tol; }

double magnitude(const GaussRational& x);
inline double magnitude(const Complexd& x) { return std::abs(x); }

Complexd to_complex(const GaussRational& x);
inline Complexd to_complex(const Complexd& x) { return x; }

std::string format_scalar(const GaussRational& x);
std::string format_scalar(const Complexd& x);

GaussRational parse_exact(std::string_view text);
Complexd parse_float(std::string_view text);

std::size_t scalar_hash(const GaussRational& x);
std::size_t scalar_hash(const Complexd& x);

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<GaussRational> {
  static constexpr Backend backend = Backend::exact;
  static GaussRational parse(std::string_view text) { return parse_exact(text); }
  static GaussRational from_fraction(long num, long den) { return GaussRational::fraction(num, den); }
};

template <>
struct FieldTraits<Complexd> {
  static constexpr Backend backend = Backend::floating;
  static Complexd parse(std::string_view text) { return parse_float(text); }
  static Complexd from_fraction(long num, long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
};

/// Backend-tagged scalar for code that only learns the backend at runtime
/// (file formats, the CLI). Mixing exact and float operands throws
/// Error(backend_mismatch); integer literals adopt the other operand's
/// backend.
class Scalar {
 public:
  Scalar() : Scalar(0L) {}
  Scalar(long literal);  // NOLINT(google-explicit-constructor)
  Scalar(GaussRational value) : value_(std::move(value)) {}  // NOLINT
  Scalar(Complexd value) : value_(value) {}                  // NOLINT

  static Scalar parse(std::string_view text, Backend backend);

  Backend backend() const;
  bool is_literal() const noexcept { return literal_; }
  const GaussRational& exact() const;
  Complexd floating() const;
  std::string format() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<GaussRational, Complexd> value_;
  bool literal_ = false;
};

bool is_zero(const Scalar& x);
bool nearly_zero(const Scalar& x, double tol);
double magnitude(const Scalar& x);

}  // namespace wildchar

template <>
struct std::hash<wildchar::GaussRational> {
  std::size_t operator()(const wildchar::GaussRational& x) const { return x.hash(); }
};
