#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "rrm/analysis.hpp"
#include "rrm/eigensolver.hpp"
#include "rrm/render.hpp"

using rrm::BigReal;
using rrm::ModelSpec;
using rrm::PrecisionContext;
using rrm::Rational;
using rrm::RealMatrix;
using rrm::SecularPair;
using rrm::SpectrumResult;

namespace {

BigReal ref(const PrecisionContext& ctx, const char* digits) {
  return ctx.from_rational(Rational::from_decimal(digits));
}

bool close_rel(const BigReal& got, const BigReal& want, const BigReal& tol,
               const PrecisionContext& ctx) {
  return abs(got - want) <= tol * max(abs(want), ctx.from_long(1));
}

}  // namespace

TEST_CASE("1x1 pencil: the quotient is 5") {
  PrecisionContext ctx(64);
  SecularPair pair = rrm::assemble(ModelSpec::standard(), 1, ctx);
  SpectrumResult r = rrm::solve(pair, ctx);
  REQUIRE(r.eigenvalues.size() == 1);
  CHECK(abs(r.eigenvalues[0] - ctx.from_long(5)) < ctx.tolerance(12));
  // S-normalized single coefficient is +sqrt(30)
  CHECK(r.coefficients(0, 0) > ctx.zero());
  CHECK(abs(r.coefficients(0, 0) * r.coefficients(0, 0) - ctx.from_long(30)) <
        ctx.tolerance(10));
}

TEST_CASE("standard N=4 matches the reference row") {
  PrecisionContext ctx(64);
  SpectrumResult r = rrm::solve(rrm::assemble(ModelSpec::standard(), 4, ctx), ctx);
  REQUIRE(r.eigenvalues.size() == 4);
  const char* row[] = {"4.934874810", "19.75077640", "51.06512518", "100.2492235"};
  BigReal tol = ctx.pow10(-9) * ctx.from_long(5);
  for (int j = 0; j < 4; ++j) CHECK(close_rel(r.eigenvalues[j], ref(ctx, row[j]), tol, ctx));
}

TEST_CASE("standard N=10: edge levels of the reference row") {
  PrecisionContext ctx(64);
  SpectrumResult r = rrm::solve(rrm::assemble(ModelSpec::standard(), 10, ctx), ctx);
  REQUIRE(r.eigenvalues.size() == 10);
  BigReal tol = ctx.pow10(-9) * ctx.from_long(5);
  CHECK(close_rel(r.eigenvalues[0], ref(ctx, "4.934802200"), tol, ctx));
  CHECK(close_rel(r.eigenvalues[3], ref(ctx, "78.95700917"), tol, ctx));
  for (unsigned j = 1; j < 10; ++j) CHECK(r.eigenvalues[j] > r.eigenvalues[j - 1]);
}

TEST_CASE("eigenvectors are S-normalized with a positive leading component") {
  PrecisionContext ctx(64);
  SecularPair pair = rrm::assemble(ModelSpec::standard(), 6, ctx);
  SpectrumResult r = rrm::solve(pair, ctx);
  const unsigned n = 6;
  for (unsigned j = 0; j < n; ++j) {
    BigReal norm = ctx.zero();
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        norm += r.coefficients(a, j) * pair.overlap(a, b) * r.coefficients(b, j);
    CHECK(abs(norm - ctx.from_long(1)) < ctx.tolerance(12));

    BigReal peak = ctx.zero();
    for (unsigned a = 0; a < n; ++a) peak = max(peak, abs(r.coefficients(a, j)));
    BigReal cutoff = ldexp2(peak, -16);
    for (unsigned a = 0; a < n; ++a) {
      if (abs(r.coefficients(a, j)) >= cutoff) {
        CHECK(r.coefficients(a, j) > ctx.zero());
        break;
      }
    }
  }
}

TEST_CASE("null classification per model") {
  PrecisionContext ctx(64);

  SpectrumResult std10 = rrm::classify_null(
      rrm::solve(rrm::assemble(ModelSpec::standard(), 10, ctx), ctx), ctx);
  CHECK(std10.null_count() == 0);

  SpectrumResult d1 = rrm::classify_null(
      rrm::solve(rrm::assemble(ModelSpec::projected(1), 6, ctx), ctx), ctx);
  CHECK(d1.null_count() == 5);

  SpectrumResult d2 = rrm::classify_null(
      rrm::solve(rrm::assemble(ModelSpec::projected(2), 6, ctx), ctx), ctx);
  CHECK(d2.null_count() == 4);

  // presentation order: the two physical levels first, ascending
  auto order = d2.presentation_order();
  REQUIRE(order.size() == 6);
  BigReal tol = ctx.pow10(-9) * ctx.from_long(5);
  CHECK(close_rel(d2.eigenvalues[order[0]], ref(ctx, "4.934802200"), tol, ctx));
  CHECK(close_rel(d2.eigenvalues[order[1]], ref(ctx, "19.73920734"), tol, ctx));
  for (unsigned t = 2; t < 6; ++t) CHECK(d2.null_flags[order[t]]);
}

TEST_CASE("weighted model accepts negative weights; bounds flip accordingly") {
  PrecisionContext ctx(64);
  ModelSpec model = ModelSpec::weighted({Rational(-1), Rational(2)});
  SpectrumResult r =
      rrm::classify_null(rrm::solve(rrm::assemble(model, 6, ctx), ctx), ctx);
  CHECK(r.null_count() == 4);
  auto order = r.presentation_order();
  const BigReal& low = r.eigenvalues[order[0]];
  const BigReal& high = r.eigenvalues[order[1]];
  // quotient of -P_1 + 2 P_2 is pinched between the extreme weights
  CHECK(low >= ctx.from_long(-1) - ctx.tolerance(15));
  CHECK(high <= ctx.from_long(2) + ctx.tolerance(15));
  CHECK(abs(low - ref(ctx, "-0.999999999945")) < ctx.pow10(-9));
  CHECK(abs(high - ref(ctx, "1.99999985283")) < ctx.pow10(-9));
}

TEST_CASE("ritz diagnostics at a comfortable basis size") {
  PrecisionContext ctx(64);
  PrecisionContext wide = PrecisionContext::unchecked(128);
  SecularPair pair = rrm::assemble(ModelSpec::standard(), 8, ctx);
  SpectrumResult r = rrm::solve(pair, ctx);
  rrm::RitzCheck check = rrm::ritz_vector_matrix_check(r, pair, wide);
  BigReal gate = wide.cast(ctx.tolerance(12));
  CHECK(check.max_gram_dev < gate);
  CHECK(check.max_value_dev < gate * rrm::inf_norm(pair.hamiltonian, ctx));
  CHECK(check.max_offdiag < gate * rrm::inf_norm(pair.hamiltonian, ctx));
  CHECK(check.max_residual < gate);
  for (unsigned j = 0; j < 8; ++j)
    CHECK(abs(check.hmat(j, j) - wide.cast(r.eigenvalues[j])) < gate);
}

TEST_CASE("pencil is invariant under basis rescaling") {
  PrecisionContext ctx(64);
  SecularPair pair = rrm::assemble(ModelSpec::standard(), 6, ctx);
  SecularPair scaled = pair;
  BigReal four = ctx.from_long(4);
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j) {
      scaled.hamiltonian(i, j) = four * pair.hamiltonian(i, j);
      scaled.overlap(i, j) = four * pair.overlap(i, j);
    }
  SpectrumResult a = rrm::solve(pair, ctx);
  SpectrumResult b = rrm::solve(scaled, ctx);
  for (unsigned j = 0; j < 6; ++j)
    CHECK(close_rel(b.eigenvalues[j], a.eigenvalues[j], ctx.tolerance(15), ctx));
}

TEST_CASE("trace identity: sum of eigenvalues equals tr(S^-1 H)") {
  PrecisionContext ctx(64);
  for (unsigned n : {4u, 8u, 12u}) {
    SecularPair pair = rrm::assemble(ModelSpec::standard(), n, ctx);
    SpectrumResult r = rrm::solve(pair, ctx);
    BigReal total = ctx.zero();
    for (const auto& w : r.eigenvalues) total += w;
    CHECK(rrm::trace_identity_gap(pair, r, ctx) <= ctx.tolerance(12) * abs(total));
  }
}

TEST_CASE("solver output is bit-deterministic") {
  PrecisionContext ctx(64);
  SpectrumResult a = rrm::solve(rrm::assemble(ModelSpec::standard(), 10, ctx), ctx);
  SpectrumResult b = rrm::solve(rrm::assemble(ModelSpec::standard(), 10, ctx), ctx);
  for (unsigned j = 0; j < 10; ++j) {
    CHECK(rrm::format_full(a.eigenvalues[j]) == rrm::format_full(b.eigenvalues[j]));
    for (unsigned i = 0; i < 10; ++i)
      CHECK(a.coefficients(i, j) == b.coefficients(i, j));
  }
}

TEST_CASE("cholesky failure at starved precision is a diagnosed error") {
  PrecisionContext narrow = PrecisionContext::unchecked(16);
  SecularPair pair = rrm::assemble(ModelSpec::standard(), 16, narrow);
  try {
    rrm::solve(pair, narrow);
    FAIL("expected SolverError");
  } catch (const rrm::SolverError& err) {
    CHECK(err.fault() == rrm::SolverFault::kNotPositiveDefinite);
    CHECK(err.basis_size() == 16);
    CHECK(std::string(err.what()).find("pivot") != std::string::npos);
  }
}

TEST_CASE("jacobi on small symmetric matrices") {
  PrecisionContext ctx(64);
  RealMatrix m(2, 2);
  m(0, 0) = ctx.from_long(2);
  m(0, 1) = ctx.from_long(1);
  m(1, 0) = ctx.from_long(1);
  m(1, 1) = ctx.from_long(2);
  rrm::JacobiOutcome out = rrm::jacobi_eigen(m, ctx);
  CHECK(out.converged);
  REQUIRE(out.values.size() == 2);
  BigReal lo = out.values[0], hi = out.values[1];
  if (hi < lo) std::swap(lo, hi);
  CHECK(abs(lo - ctx.from_long(1)) < ctx.tolerance(12));
  CHECK(abs(hi - ctx.from_long(3)) < ctx.tolerance(12));

  RealMatrix d(3, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) d(i, j) = ctx.from_long(i == j ? long(3 - i) : 0);
  rrm::JacobiOutcome diag = rrm::jacobi_eigen(d, ctx);
  CHECK(diag.converged);
  CHECK(diag.sweeps == 0);
  CHECK(diag.values[0] == ctx.from_long(3));
  CHECK(diag.values[2] == ctx.from_long(1));
}
