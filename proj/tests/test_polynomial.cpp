#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "rrm/polynomial.hpp"

using rrm::Polynomial;
using rrm::Rational;

namespace {

Polynomial make(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return Polynomial(std::move(r));
}

}  // namespace

TEST_CASE("basis functions x^i (1-x)") {
  Polynomial u1 = rrm::basis_function(1);
  CHECK(u1.degree() == 2);
  CHECK(u1.coefficient(0) == Rational(0));
  CHECK(u1.coefficient(1) == Rational(1));
  CHECK(u1.coefficient(2) == Rational(-1));

  Polynomial u2 = rrm::basis_function(2);
  CHECK(u2 == make({0, 0, 1, -1}));

  // u_3(1/2) = (1/8)(1/2) = 1/16
  CHECK(rrm::basis_function(3).evaluate(Rational(1, 2)) == Rational(1, 16));

  CHECK_THROWS_AS(rrm::basis_function(0), std::invalid_argument);
}

TEST_CASE("basis functions vanish at both endpoints") {
  for (unsigned i = 1; i <= 20; ++i) {
    Polynomial u = rrm::basis_function(i);
    CHECK(u.evaluate(Rational(0)).is_zero());
    CHECK(u.evaluate(Rational(1)).is_zero());
  }
}

TEST_CASE("degree and trimming") {
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial().is_zero());
  CHECK(make({1, 2, 0, 0}).degree() == 1);
  CHECK(make({0}).is_zero());
  CHECK((make({1, 1}) - make({0, 1})) == make({1}));
  CHECK((make({1, 1}) - make({1, 1})).is_zero());
}

TEST_CASE("evaluate uses exact arithmetic") {
  // p(x) = 1 - 3x + 2x^2 at x = 1/3: 1 - 1 + 2/9 = 2/9
  Polynomial p = make({1, -3, 2});
  CHECK(p.evaluate(Rational(1, 3)) == Rational(2, 9));
  CHECK(Polynomial().evaluate(Rational(7)) == Rational(0));
}

TEST_CASE("derivative") {
  // d/dx (x - x^2) = 1 - 2x
  CHECK(rrm::basis_function(1).derivative() == make({1, -2}));
  // d/dx (x^2 - x^3) = 2x - 3x^2
  CHECK(rrm::basis_function(2).derivative() == make({0, 2, -3}));
  CHECK(make({5}).derivative().is_zero());
  CHECK(Polynomial().derivative().is_zero());
}

TEST_CASE("multiplication") {
  // (x - x^2)^2 = x^2 - 2x^3 + x^4
  Polynomial u1 = rrm::basis_function(1);
  CHECK(u1 * u1 == make({0, 0, 1, -2, 1}));
  CHECK((u1 * Polynomial()).is_zero());

  // commutativity / associativity on a deterministic small set
  std::vector<Polynomial> ps = {make({1, 2}), make({0, -1, 3}), make({2, 0, 0, 5}),
                                rrm::basis_function(2)};
  for (const auto& a : ps)
    for (const auto& b : ps) {
      CHECK(a * b == b * a);
      for (const auto& c : ps) CHECK((a * b) * c == a * (b * c));
    }

  CHECK(Rational(1, 2) * make({2, 4}) == make({1, 2}));
}

TEST_CASE("integrate_unit: exact integrals over [0,1]") {
  // int x^2 = 1/3
  CHECK(make({0, 0, 1}).integrate_unit() == Rational(1, 3));
  // int u1^2 = 1/30 (the N=1 overlap entry)
  Polynomial u1 = rrm::basis_function(1);
  CHECK((u1 * u1).integrate_unit() == Rational(1, 30));
  // int (u1')^2 = int (1-2x)^2 = 1/3
  Polynomial d1 = u1.derivative();
  CHECK((d1 * d1).integrate_unit() == Rational(1, 3));
  CHECK(Polynomial().integrate_unit() == Rational(0));
}

TEST_CASE("integrate_unit is linear") {
  Polynomial a = make({1, -2, 3});
  Polynomial b = rrm::basis_function(3);
  Rational s(5, 7);
  CHECK((a + s * b).integrate_unit() == a.integrate_unit() + s * b.integrate_unit());
}

TEST_CASE("integral of a square is positive for nonzero polynomials") {
  std::vector<Polynomial> ps = {make({0, 1, -1}), make({-1, 2}), make({0, 0, 0, 1}),
                                rrm::basis_function(5) - rrm::basis_function(2)};
  for (const auto& p : ps) CHECK((p * p).integrate_unit().sign() == 1);
}
