#include "rrm/polynomial.hpp"

#include <stdexcept>

namespace rrm {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t m = 1; m < coeffs_.size(); ++m)
    d[m - 1] = Rational(static_cast<long>(m)) * coeffs_[m];
  return Polynomial(std::move(d));
}

Rational Polynomial::integrate_unit() const {
  Rational acc(0);
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    acc += coeffs_[m] / Rational(static_cast<long>(m + 1));
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t m = 0; m < coeffs_.size(); ++m) c[m] = -coeffs_[m];
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c(p.coeffs_.size());
  for (std::size_t m = 0; m < p.coeffs_.size(); ++m) c[m] = s * p.coeffs_[m];
  return Polynomial(std::move(c));
}

Polynomial basis_function(unsigned i) {
  if (i == 0)
    throw std::invalid_argument("basis_function: index must be >= 1 (u_0 misses the boundary)");
  // x^i - x^(i+1)
  std::vector<Rational> c(i + 2, Rational(0));
  c[i] = Rational(1);
  c[i + 1] = Rational(-1);
  return Polynomial(std::move(c));
}

}  // namespace rrm
