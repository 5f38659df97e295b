#include <doctest.h>

#include <stdexcept>
#include <string>

#include "rrm/bigreal.hpp"

using rrm::BigReal;
using rrm::PrecisionContext;
using rrm::Rational;

namespace {

// Reference digits, independent of MPFR's own constant.
const char* kPi45 = "3.14159265358979323846264338327950288419716939";

}  // namespace

TEST_CASE("precision mapping uses two guard digits") {
  // bits = ceil((digits + 2) * log2(10))
  CHECK(PrecisionContext(64).bit_precision() == 220);
  CHECK(PrecisionContext(30).bit_precision() == 107);
  CHECK(PrecisionContext::unchecked(16).bit_precision() == 60);
}

TEST_CASE("context floor: below 30 digits requires unchecked") {
  CHECK_THROWS_AS(PrecisionContext(29), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionContext(0), std::invalid_argument);
  CHECK(PrecisionContext::unchecked(16).decimal_digits() == 16);
  CHECK_THROWS_AS(PrecisionContext::unchecked(1), std::invalid_argument);
}

TEST_CASE("pi matches an external 45-digit reference") {
  PrecisionContext ctx(64);
  BigReal gap = abs(ctx.pi() - ctx.from_rational(Rational::from_decimal(kPi45)));
  CHECK(gap < ctx.pow10(-44));

  PrecisionContext narrow = PrecisionContext::unchecked(16);
  BigReal gap16 = abs(narrow.pi() - narrow.from_rational(Rational::from_decimal(kPi45)));
  // must agree to at least digits - 2 decimal places
  CHECK(gap16 < narrow.tolerance(2));
}

TEST_CASE("from_rational rounds once") {
  PrecisionContext ctx(64);
  BigReal half = ctx.from_rational(Rational(1, 2));
  CHECK(half == ldexp2(ctx.from_long(1), -1));  // exactly representable
  BigReal third = ctx.from_rational(Rational(1, 3));
  CHECK(abs(third * ctx.from_long(3) - ctx.from_long(1)) < ctx.pow10(-60));
}

TEST_CASE("operations join to the wider precision") {
  PrecisionContext wide(64);
  PrecisionContext narrow = PrecisionContext::unchecked(16);
  BigReal a = wide.from_long(1) / wide.from_long(3);
  BigReal b = narrow.from_long(1) / narrow.from_long(7);
  CHECK((a + b).precision() == wide.bit_precision());
  CHECK((b * a).precision() == wide.bit_precision());
}

TEST_CASE("cast re-rounds into the target context") {
  PrecisionContext wide(64);
  PrecisionContext narrow = PrecisionContext::unchecked(16);
  BigReal x = wide.from_long(1) / wide.from_long(3);
  BigReal y = narrow.cast(x);
  CHECK(y.precision() == narrow.bit_precision());
  CHECK(wide.cast(y).precision() == wide.bit_precision());
  CHECK(abs(wide.cast(y) - x) < narrow.tolerance(0));
}

TEST_CASE("tolerance ladder") {
  PrecisionContext ctx(64);
  CHECK(ctx.tolerance(12) == ctx.pow10(-52));
  CHECK(ctx.tolerance(15) == ctx.pow10(-49));
  CHECK(ctx.pow10(0) == ctx.from_long(1));
  CHECK(ctx.pow10(3) == ctx.from_long(1000));
}

TEST_CASE("basic functions behave") {
  PrecisionContext ctx(64);
  BigReal two = ctx.from_long(2);
  CHECK(abs(sqrt(two) * sqrt(two) - two) < ctx.tolerance(2));
  CHECK(sin(ctx.zero()).is_zero());
  CHECK(abs(sin(ctx.pi())) < ctx.tolerance(2));
  CHECK(abs(cos(ctx.pi()) + ctx.from_long(1)) < ctx.tolerance(2));
  CHECK(abs(ctx.from_long(-3)) == ctx.from_long(3));
  CHECK(max(ctx.from_long(2), ctx.from_long(5)) == ctx.from_long(5));
}

TEST_CASE("to_scientific is deterministic and round-half-even") {
  PrecisionContext ctx(64);
  BigReal third = ctx.from_long(1) / ctx.from_long(3);
  CHECK(third.to_scientific(5) == "3.3333e-01");
  CHECK(third.to_scientific(5) == third.to_scientific(5));
  CHECK(ctx.from_long(-250).to_scientific(2) == "-2.5e+02");
}

TEST_CASE("identical computations are bit-identical") {
  auto run = [] {
    PrecisionContext ctx(64);
    BigReal s = ctx.zero();
    for (long k = 1; k <= 40; ++k) s += ctx.from_long(1) / ctx.from_long(k * k);
    return sqrt(s) / ctx.pi();
  };
  BigReal a = run();
  BigReal b = run();
  CHECK(a == b);
  CHECK(a.to_scientific(40) == b.to_scientific(40));
}
