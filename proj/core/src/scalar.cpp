#include "wildchar/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <system_error>

namespace wildchar {

namespace {

constexpr unsigned long kHashModulus = 2305843009213693951UL;  // 2^61 - 1

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_mpz(const mpz_class& z) {
  const std::size_t residue = mpz_fdiv_ui(z.get_mpz_t(), kHashModulus);
  return mix(static_cast<std::size_t>(sgn(z) + 1), residue);
}

std::size_t hash_mpq(const mpq_class& q) {
  return mix(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

[[noreturn]] void parse_failure(std::string_view text, const char* why) {
  throw Error(ErrorCode::parse_error,
              "cannot parse scalar \"" + std::string(text) + "\": " + why);
}

mpq_class parse_rational(std::string_view full, std::string_view part) {
  if (part.empty()) parse_failure(full, "empty component");
  std::string buffer(part);
  if (buffer.front() == '+') buffer.erase(0, 1);
  if (buffer.empty()) parse_failure(full, "empty component");
  for (char c : buffer) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      parse_failure(full, "unexpected character");
    }
  }
  const auto slash = buffer.find('/');
  if (slash != std::string::npos) {
    const std::string den = buffer.substr(slash + 1);
    if (den.empty() || den.find_first_not_of('0') == std::string::npos) {
      parse_failure(full, "zero or missing denominator");
    }
    if (den.find('-') != std::string::npos) parse_failure(full, "signed denominator");
  }
  mpq_class q;
  if (q.set_str(buffer, 10) != 0) parse_failure(full, "malformed rational");
  q.canonicalize();
  return q;
}

double parse_double(std::string_view full, std::string_view part) {
  if (part.empty()) parse_failure(full, "empty component");
  if (part.front() == '+') part.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
  if (ec != std::errc() || ptr != part.data() + part.size()) {
    parse_failure(full, "malformed decimal");
  }
  return value;
}

// Splits "re(+|-)im*i" into its two parts. The imaginary part keeps its sign.
// Returns false when the text has no imaginary suffix.
bool split_complex(std::string_view text, std::string_view& re, std::string_view& im) {
  constexpr std::string_view suffix = "*i";
  if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
    return false;
  }
  const std::string_view body = text.substr(0, text.size() - suffix.size());
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      re = body.substr(0, k);
      im = body.substr(k);
      return true;
    }
  }
  parse_failure(text, "imaginary part without a real part");
}

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop negative zero
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, ptr);
}

}  // namespace

std::string_view backend_name(Backend backend) {
  return backend == Backend::exact ? "exact" : "float";
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::exact;
  if (text == "float") return Backend::floating;
  throw Error(ErrorCode::parse_error,
              "unknown backend \"" + std::string(text) + "\" (expected exact|float)");
}

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRational(std::move(q));
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  const mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussRational& GaussRational::operator+=(const GaussRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& other) {
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& other) {
  if (other.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
  if (sgn(other.im_) == 0) {
    re_ /= other.re_;
    im_ /= other.re_;
    return *this;
  }
  return *this *= other.inverse();
}

std::size_t GaussRational::hash() const { return mix(hash_mpq(re_), hash_mpq(im_)); }

double magnitude(const GaussRational& x) { return std::hypot(x.re().get_d(), x.im().get_d()); }

Complexd to_complex(const GaussRational& x) { return {x.re().get_d(), x.im().get_d()}; }

std::string format_scalar(const GaussRational& x) {
  std::string out = x.re().get_str();
  if (x.is_real()) return out;
  if (sgn(x.im()) > 0) {
    out += '+';
    out += x.im().get_str();
  } else {
    out += x.im().get_str();  // carries its '-'
  }
  out += "*i";
  return out;
}

std::string format_scalar(const Complexd& x) {
  std::string out = format_double(x.real());
  if (x.imag() == 0.0) return out;
  const std::string im = format_double(x.imag());
  if (im.front() != '-') out += '+';
  out += im;
  out += "*i";
  return out;
}

GaussRational parse_exact(std::string_view text) {
  std::string_view re = text;
  std::string_view im;
  if (split_complex(text, re, im)) {
    return {parse_rational(text, re), parse_rational(text, im)};
  }
  return GaussRational(parse_rational(text, text));
}

Complexd parse_float(std::string_view text) {
  std::string_view re = text;
  std::string_view im;
  if (split_complex(text, re, im)) {
    return {parse_double(text, re), parse_double(text, im)};
  }
  return {parse_double(text, text), 0.0};
}

std::size_t scalar_hash(const GaussRational& x) { return x.hash(); }

std::size_t scalar_hash(const Complexd& x) {
  return mix(std::hash<double>{}(x.real()), std::hash<double>{}(x.imag()));
}

// --- Scalar ---------------------------------------------------------------

namespace {

enum class Op { add, sub, mul, div };

template <class T>
T apply(Op op, const T& a, const T& b) {
  switch (op) {
    case Op::add: return a + b;
    case Op::sub: return a - b;
    case Op::mul: return a * b;
    case Op::div:
      if (is_zero(b)) throw Error(ErrorCode::division_by_zero, "division by zero");
      return a / b;
  }
  return a;
}

}  // namespace

Scalar::Scalar(long literal) : value_(GaussRational(literal)), literal_(true) {}

Scalar Scalar::parse(std::string_view text, Backend backend) {
  if (backend == Backend::exact) return Scalar(parse_exact(text));
  return Scalar(parse_float(text));
}

Backend Scalar::backend() const {
  return std::holds_alternative<GaussRational>(value_) ? Backend::exact : Backend::floating;
}

const GaussRational& Scalar::exact() const {
  if (const auto* v = std::get_if<GaussRational>(&value_)) return *v;
  throw Error(ErrorCode::backend_mismatch, "float scalar used where an exact one is required");
}

Complexd Scalar::floating() const {
  if (const auto* v = std::get_if<Complexd>(&value_)) return *v;
  if (literal_) return to_complex(std::get<GaussRational>(value_));
  throw Error(ErrorCode::backend_mismatch, "exact scalar used where a float one is required");
}

std::string Scalar::format() const {
  return std::visit([](const auto& v) { return format_scalar(v); }, value_);
}

namespace {

Scalar combine(Op op, const Scalar& a, const Scalar& b) {
  const bool a_float = a.backend() == Backend::floating;
  const bool b_float = b.backend() == Backend::floating;
  if (a_float || b_float) {
    if ((!a_float && !a.is_literal()) || (!b_float && !b.is_literal())) {
      throw Error(ErrorCode::backend_mismatch, "cannot combine exact and float scalars");
    }
    return Scalar(apply(op, a.floating(), b.floating()));
  }
  return Scalar(apply(op, a.exact(), b.exact()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out = combine(Op::add, a, b);
  out.literal_ = a.literal_ && b.literal_;
  return out;
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar out = combine(Op::sub, a, b);
  out.literal_ = a.literal_ && b.literal_;
  return out;
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out = combine(Op::mul, a, b);
  out.literal_ = a.literal_ && b.literal_;
  return out;
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar out = combine(Op::div, a, b);
  out.literal_ = a.literal_ && b.literal_;
  return out;
}

Scalar operator-(const Scalar& a) {
  Scalar out = std::visit([](const auto& v) { return Scalar(-v); }, a.value_);
  out.literal_ = a.literal_;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) {
    if (!a.literal_ && !b.literal_) return false;
    return a.floating() == b.floating();
  }
  return a.value_ == b.value_;
}

bool is_zero(const Scalar& x) {
  return x.backend() == Backend::exact ? x.exact().is_zero() : is_zero(x.floating());
}

bool nearly_zero(const Scalar& x, double tol) {
  return x.backend() == Backend::exact ? x.exact().is_zero() : std::abs(x.floating()) <= tol;
}

double magnitude(const Scalar& x) {
  return x.backend() == Backend::exact ? magnitude(x.exact()) : std::abs(x.floating());
}

}  // namespace wildchar
