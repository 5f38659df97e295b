#pragma once

#include <span>
#include <vector>

#include "rrm/rational.hpp"

namespace rrm {

/// Polynomial over the rationals, dense coefficient form, lowest power first.
/// Trailing zero coefficients are trimmed; the zero polynomial has no coefficients
/// and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }

  Rational evaluate(const Rational& x) const;  // exact Horner
  Polynomial derivative() const;

  /// Exact integral over [0,1]: sum c_m / (m+1).
  Rational integrate_unit() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Trial basis function u_i(x) = x^i (1 - x) for i >= 1.
/// Throws std::invalid_argument for i = 0 (u_0 would not vanish at x = 0).
Polynomial basis_function(unsigned i);

}  // namespace rrm
