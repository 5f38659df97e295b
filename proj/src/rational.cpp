#include "rrm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace rrm {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_decimal(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("Rational::from_decimal: malformed literal '" +
                                std::string(text) + "'");
  };
  std::size_t pos = 0;
  const auto peek = [&]() -> int {
    return pos < text.size() ? static_cast<unsigned char>(text[pos]) : -1;
  };

  std::string digits;  // mantissa digits with the point removed
  bool negative = false;
  if (peek() == '+' || peek() == '-') negative = text[pos++] == '-';

  std::size_t int_len = 0;
  while (std::isdigit(peek())) { digits += text[pos++]; ++int_len; }
  long frac_len = 0;
  if (peek() == '.') {
    ++pos;
    while (std::isdigit(peek())) { digits += text[pos++]; ++frac_len; }
  }
  if (int_len == 0 && frac_len == 0) fail();

  long exponent = 0;
  if (peek() == 'e' || peek() == 'E') {
    ++pos;
    bool exp_neg = false;
    if (peek() == '+' || peek() == '-') exp_neg = text[pos++] == '-';
    if (!std::isdigit(peek())) fail();
    while (std::isdigit(peek())) {
      exponent = exponent * 10 + (text[pos++] - '0');
      if (exponent > 1'000'000) fail();
    }
    if (exp_neg) exponent = -exponent;
  }
  if (pos != text.size()) fail();

  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  if (negative) mantissa = -mantissa;

  const long shift = exponent - frac_len;  // value = mantissa * 10^shift
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift < 0 ? mpq_class(mantissa, scale) : mpq_class(mantissa * scale);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rrm
