#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rrm {

/// Exact rational number. Always in lowest terms with a positive denominator.
/// Arithmetic never rounds; division by zero throws std::domain_error.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose
  Rational(long n, long d);
  explicit Rational(mpq_class q);

  /// Parses an exact decimal literal such as "-2.5", "1e-3" or "0.125".
  /// Throws std::invalid_argument on anything else.
  static Rational from_decimal(std::string_view text);

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Underlying GMP value; used by the real-arithmetic layer for exact conversion.
  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rrm
