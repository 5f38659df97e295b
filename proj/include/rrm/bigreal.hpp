#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "rrm/rational.hpp"

namespace rrm {

/// Arbitrary-precision binary float (MPFR), round-to-nearest-even everywhere.
/// Each value carries its precision; binary operations round once into the
/// wider of the two operand precisions, so a computation seeded from a single
/// PrecisionContext stays at that context's precision throughout.
class BigReal {
 public:
  BigReal() { mpfr_init2(v_, kMinPrec); mpfr_set_zero(v_, 1); }
  explicit BigReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigReal(BigReal&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigReal() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  BigReal operator-() const {
    BigReal r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r;
  }
  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
  BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend BigReal sqrt(const BigReal& a) {
    BigReal r(a.precision()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r;
  }
  friend BigReal abs(const BigReal& a) {
    BigReal r(a.precision()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r;
  }
  friend BigReal sin(const BigReal& a) {
    BigReal r(a.precision()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r;
  }
  friend BigReal cos(const BigReal& a) {
    BigReal r(a.precision()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r;
  }
  /// a * 2^e, exact.
  friend BigReal ldexp2(const BigReal& a, long e) {
    BigReal r(a.precision()); mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN); return r;
  }
  friend const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

  /// Normalized scientific form with `sig_digits` significant digits,
  /// e.g. "4.934802201e+00". Round-half-even, deterministic.
  std::string to_scientific(unsigned sig_digits) const;

 private:
  static constexpr mpfr_prec_t kMinPrec = 53;
  static mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  mpfr_t v_;
};

/// Fixes the working precision for a whole computation. Values are created
/// through the context so every downstream operation rounds at the same width.
/// The public constructor enforces the supported floor of 30 decimal digits;
/// `unchecked` exists for deliberate precision-degradation studies.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned decimal_digits);
  static PrecisionContext unchecked(unsigned decimal_digits);

  unsigned decimal_digits() const { return digits_; }
  mpfr_prec_t bit_precision() const { return prec_; }

  BigReal zero() const { return BigReal(prec_); }
  /// Re-rounds x into this context's precision (exact when widening).
  BigReal cast(const BigReal& x) const;
  BigReal from_long(long n) const;
  BigReal from_rational(const Rational& q) const;  // single correct rounding
  BigReal pi() const { return pi_; }
  BigReal pow10(long e) const;
  /// 10^-(decimal_digits - offset); the spec-style tolerance ladder.
  BigReal tolerance(unsigned offset) const {
    return pow10(-static_cast<long>(digits_) + static_cast<long>(offset));
  }

 private:
  PrecisionContext(unsigned decimal_digits, bool checked);
  unsigned digits_;
  mpfr_prec_t prec_;
  BigReal pi_;
};

}  // namespace rrm
