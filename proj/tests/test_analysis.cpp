#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "rrm/reference.hpp"

using rrm::BigReal;
using rrm::ConvergenceTable;
using rrm::ModelSpec;
using rrm::PrecisionContext;
using rrm::Rational;

namespace {

// 480/pi^4, the rank-1 single-basis-function Rayleigh quotient.
const char* kQuotient111 = "4.92767148224848089079333596821697318";

std::string describe(const std::vector<rrm::TableMismatch>& bad) {
  std::string out;
  for (const auto& m : bad) {
    out += "N=" + std::to_string(m.basis_size) + " level " + std::to_string(m.level) +
           ": expected " + m.expected + ", got " + m.got + "; ";
  }
  return out;
}

}  // namespace

TEST_CASE("reference tables reproduce at 64 digits") {
  PrecisionContext ctx(64);
  for (const rrm::ReferenceTable* table : rrm::all_reference_tables()) {
    auto bad = rrm::run_reference_regression(*table, ctx);
    INFO(table->model.label(), ": ", describe(bad));
    CHECK(bad.empty());
  }
}

TEST_CASE("box levels") {
  PrecisionContext ctx(64);
  BigReal pi2 = ctx.pi() * ctx.pi();
  CHECK(abs(rrm::box_level(1, ctx) - pi2 / ctx.from_long(2)) < ctx.tolerance(2));
  CHECK(abs(rrm::box_level(3, ctx) - ctx.from_long(9) * pi2 / ctx.from_long(2)) <
        ctx.tolerance(2));
}

TEST_CASE("bound dichotomy across the five tables") {
  PrecisionContext ctx(64);
  for (const rrm::ReferenceTable* table : rrm::all_reference_tables()) {
    ConvergenceTable built =
        rrm::build_table(table->model, table->n_min, table->n_max, table->levels, ctx);
    rrm::BoundReport report = rrm::verify_bounds(built, ctx);
    CHECK(report.applicable);
    CHECK(report.all_bounds_ok);
    CHECK(report.all_monotone_ok);
    CHECK(report.monotone.size() == table->levels);
  }
}

TEST_CASE("bounds are marked not applicable for sign-mixed or unsorted weights") {
  PrecisionContext ctx(64);
  ConvergenceTable negative = rrm::build_table(
      ModelSpec::weighted({Rational(-1), Rational(2)}), 4, 6, 2, ctx);
  CHECK_FALSE(rrm::verify_bounds(negative, ctx).applicable);

  ConvergenceTable unsorted = rrm::build_table(
      ModelSpec::weighted({Rational(3), Rational(1)}), 4, 6, 2, ctx);
  CHECK_FALSE(rrm::verify_bounds(unsorted, ctx).applicable);
}

TEST_CASE("duality: the D x D dual matrix carries the non-null spectrum") {
  PrecisionContext ctx(64);
  BigReal tol = ctx.tolerance(15);
  std::vector<std::pair<ModelSpec, unsigned>> cases = {
      {ModelSpec::projected(1), 5},
      {ModelSpec::projected(2), 8},
      {ModelSpec::projected(3), 11},
      {ModelSpec::weighted({Rational(1), Rational(2), Rational(3)}), 9},
  };
  for (const auto& [model, n] : cases) {
    auto dual = rrm::duality_oracle_eigenvalues(n, model, ctx);
    auto pencil = rrm::classify_null(rrm::solve(rrm::assemble(model, n, ctx), ctx), ctx);
    auto order = pencil.presentation_order();
    unsigned nonnull = n - pencil.null_count();
    REQUIRE(dual.size() == nonnull);
    for (unsigned k = 0; k < nonnull; ++k) {
      const BigReal& got = pencil.eigenvalues[order[k]];
      CHECK(abs(dual[k] - got) <= tol * max(abs(got), ctx.from_long(1)));
    }
  }
  CHECK_THROWS_AS(rrm::duality_oracle_eigenvalues(4, ModelSpec::standard(), ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(rrm::duality_oracle_eigenvalues(
                      4, ModelSpec::weighted({Rational(-1), Rational(2)}), ctx),
                  std::invalid_argument);
}

TEST_CASE("duality also bounds each level by its own weight") {
  PrecisionContext ctx(64);
  auto dual = rrm::duality_oracle_eigenvalues(10, ModelSpec::projected(3), ctx);
  REQUIRE(dual.size() == 3);
  for (unsigned k = 0; k < 3; ++k)
    CHECK(dual[k] <= rrm::box_level(k + 1, ctx) + ctx.tolerance(15));
}

TEST_CASE("cauchy-schwarz demo: the (1,1,1) quotient is 480/pi^4") {
  PrecisionContext ctx(64);
  rrm::CauchySchwarzResult r = rrm::cauchy_schwarz_demo(1, 1, 1, ctx);
  BigReal expected = ctx.from_rational(Rational::from_decimal(kQuotient111));
  CHECK(abs(r.quotient - expected) < ctx.pow10(-30));
  CHECK(abs(r.bound - expected) < ctx.pow10(-30));
  CHECK(r.below);
  CHECK(abs(r.reference - rrm::box_level(1, ctx)) < ctx.tolerance(2));
}

TEST_CASE("cauchy-schwarz demo stays below the projector level") {
  PrecisionContext ctx(64);
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 1; n <= d; ++n) {
      BigReal prev = ctx.zero();
      for (unsigned basis = d; basis <= 13; ++basis) {
        rrm::CauchySchwarzResult r = rrm::cauchy_schwarz_demo(n, d, basis, ctx);
        CHECK(r.below);
        CHECK(r.quotient <= r.reference + ctx.tolerance(15));
        // the two evaluation paths agree
        CHECK(abs(r.quotient - r.bound) <=
              ctx.tolerance(12) * max(abs(r.quotient), ctx.from_long(1)));
        // quotients sharpen monotonically as the basis grows
        if (basis > d) CHECK(r.quotient >= prev - ctx.tolerance(15));
        prev = r.quotient;
      }
    }
}

TEST_CASE("cauchy-schwarz demo rejects inconsistent arguments") {
  PrecisionContext ctx(64);
  CHECK_THROWS_AS(rrm::cauchy_schwarz_demo(0, 1, 4, ctx), std::invalid_argument);
  CHECK_THROWS_AS(rrm::cauchy_schwarz_demo(2, 1, 4, ctx), std::invalid_argument);
  CHECK_THROWS_AS(rrm::cauchy_schwarz_demo(1, 2, 1, ctx), std::invalid_argument);
}

TEST_CASE("spectral identity check passes on the contract cases") {
  PrecisionContext ctx(64);
  struct Case {
    ModelSpec model;
    unsigned n;
  };
  std::vector<Case> cases = {
      {ModelSpec::standard(), 4},
      {ModelSpec::standard(), 8},
      {ModelSpec::projected(2), 10},
      {ModelSpec::weighted({Rational(1), Rational(2), Rational(3)}), 9},
  };
  for (const auto& c : cases) {
    rrm::SecularPair pair = rrm::assemble(c.model, c.n, ctx);
    rrm::SpectrumResult r = rrm::classify_null(rrm::solve(pair, ctx), ctx);
    rrm::SpectralIdentityVerdict v = rrm::spectral_identity_check(r, pair, ctx);
    INFO(c.model.label(), " N=", c.n);
    CHECK(v.pass);
    CHECK(v.max_gram_dev <= v.tolerance);
    CHECK(v.max_offdiag <= v.tolerance * v.h_norm);
  }
}

TEST_CASE("build_table propagates solver failures") {
  PrecisionContext narrow = PrecisionContext::unchecked(16);
  CHECK_THROWS_AS(rrm::build_table(ModelSpec::standard(), 16, 16, 4, narrow),
                  rrm::SolverError);
}

TEST_CASE("build_table row shape tracks the rank") {
  PrecisionContext ctx(64);
  ConvergenceTable t = rrm::build_table(ModelSpec::projected(3), 2, 4, 3, ctx);
  REQUIRE(t.rows.size() == 3);
  // N=2 can only hold two non-null levels
  CHECK(t.rows[0].values.size() == 2);
  CHECK(t.rows[0].null_count == 0);
  CHECK(t.rows[1].values.size() == 3);
  CHECK(t.rows[1].null_count == 0);
  CHECK(t.rows[2].values.size() == 3);
  CHECK(t.rows[2].null_count == 1);
}
