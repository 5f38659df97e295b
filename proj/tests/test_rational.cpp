#include <doctest.h>

#include <stdexcept>

#include "rrm/rational.hpp"

using rrm::Rational;

TEST_CASE("rational canonical form") {
  Rational a(6, 4);
  CHECK(a == Rational(3, 2));
  CHECK(a.numerator() == "3");
  CHECK(a.denominator() == "2");

  Rational b(2, -4);
  CHECK(b == Rational(-1, 2));
  CHECK(b.sign() == -1);
  CHECK(b.denominator() == "2");

  CHECK(Rational(0, 7).is_zero());
  CHECK(Rational(0, -7) == Rational());
}

TEST_CASE("rational arithmetic is exact") {
  Rational half(1, 2);
  Rational third(1, 3);

  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(-half == Rational(-1, 2));

  // 1/30 and 1/60 style entries stay exact under accumulation.
  Rational sum;
  for (int i = 0; i < 60; ++i) sum += Rational(1, 60);
  CHECK(sum == Rational(1));
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(5).abs() == Rational(5));
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(), std::domain_error);
}

TEST_CASE("from_decimal parses exact decimal strings") {
  CHECK(Rational::from_decimal("2.5") == Rational(5, 2));
  CHECK(Rational::from_decimal("-0.125") == Rational(-1, 8));
  CHECK(Rational::from_decimal("+3") == Rational(3));
  CHECK(Rational::from_decimal("1e-3") == Rational(1, 1000));
  CHECK(Rational::from_decimal("2.5e2") == Rational(250));
  CHECK(Rational::from_decimal("0.0") == Rational());
  CHECK(Rational::from_decimal("4.934802200") ==
        Rational(4934802200L, 1000000000L));
}

TEST_CASE("from_decimal rejects malformed input") {
  CHECK_THROWS_AS(Rational::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("1e"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("--1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("1 2"), std::invalid_argument);
}

TEST_CASE("rational string form") {
  CHECK(Rational(1, 30).str() == "1/30");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-7, 2).str() == "-7/2");
}
