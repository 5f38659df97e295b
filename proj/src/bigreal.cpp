#include "rrm/bigreal.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace rrm {

std::string BigReal::to_scientific(unsigned sig_digits) const {
  if (sig_digits == 0) throw std::invalid_argument("to_scientific: need at least one digit");
  std::vector<char> buf(sig_digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(sig_digits) - 1, v_);
  return std::string(buf.data());
}

PrecisionContext::PrecisionContext(unsigned decimal_digits, bool checked)
    : digits_(decimal_digits) {
  if (checked && decimal_digits < 30)
    throw std::invalid_argument("PrecisionContext: fewer than 30 decimal digits");
  if (decimal_digits < 2)
    throw std::invalid_argument("PrecisionContext: fewer than 2 decimal digits");
  // Two guard digits keep the digit->bit conversion from landing knife-edge
  // against the overlap matrix's smallest pivots at the top of the N range.
  prec_ = static_cast<mpfr_prec_t>(std::ceil((decimal_digits + 2) * std::log2(10.0)));
  pi_ = BigReal(prec_);
  mpfr_const_pi(pi_.raw(), MPFR_RNDN);
}

PrecisionContext::PrecisionContext(unsigned decimal_digits)
    : PrecisionContext(decimal_digits, true) {}

PrecisionContext PrecisionContext::unchecked(unsigned decimal_digits) {
  return PrecisionContext(decimal_digits, false);
}

BigReal PrecisionContext::cast(const BigReal& x) const {
  BigReal r(prec_);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal PrecisionContext::from_long(long n) const {
  BigReal r(prec_);
  mpfr_set_si(r.raw(), n, MPFR_RNDN);
  return r;
}

BigReal PrecisionContext::from_rational(const Rational& q) const {
  BigReal r(prec_);
  mpfr_set_q(r.raw(), q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

BigReal PrecisionContext::pow10(long e) const {
  BigReal ten = from_long(10);
  BigReal r(prec_);
  mpfr_pow_si(r.raw(), ten.raw(), e, MPFR_RNDN);
  return r;
}

}  // namespace rrm
