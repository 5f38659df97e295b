#include "rrm/verification.hpp"

#include <algorithm>
#include <sstream>

#include "rrm/moments.hpp"
#include "rrm/reference.hpp"
#include "rrm/render.hpp"

namespace rrm {

unsigned VerificationReport::passed() const {
  return static_cast<unsigned>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

unsigned VerificationReport::failed() const {
  return static_cast<unsigned>(checks.size()) - passed();
}

namespace {

void add(VerificationReport& report, std::string name, bool pass, std::string detail) {
  report.checks.push_back({std::move(name), pass, std::move(detail)});
}

void check_regressions(VerificationReport& report, const PrecisionContext& ctx) {
  for (const ReferenceTable* ref : all_reference_tables()) {
    const auto mismatches = run_reference_regression(*ref, ctx);
    std::string detail = "all cells within 5e-9 relative, null counts exact";
    if (!mismatches.empty()) {
      const auto& m = mismatches.front();
      detail = "N=" + std::to_string(m.basis_size) +
               (m.level == 0 ? " null count " : " level " + std::to_string(m.level) + " ") +
               "expected " + m.expected + " got " + m.got +
               (mismatches.size() > 1 ? " (+" + std::to_string(mismatches.size() - 1) + " more)"
                                      : "");
    }
    add(report, "table regression: " + ref->model.label(), mismatches.empty(), detail);
  }
}

void check_bounds(VerificationReport& report, const PrecisionContext& ctx) {
  for (const ReferenceTable* ref : all_reference_tables()) {
    const ConvergenceTable table =
        build_table(ref->model, ref->n_min, ref->n_max, ref->levels, ctx);
    const BoundReport bounds = verify_bounds(table, ctx);
    const bool pass = bounds.applicable && bounds.all_bounds_ok && bounds.all_monotone_ok;
    std::ostringstream detail;
    const bool upper = ref->model.kind == ModelKind::kStandard;
    detail << (upper ? "upper bounds + monotone descent" : "lower bounds + monotone ascent");
    if (!pass) detail << "; " << render_bounds(bounds, 10);
    add(report, "bound dichotomy: " + ref->model.label(), pass, detail.str());
  }
}

void check_moment_oracle(VerificationReport& report, const PrecisionContext& ctx) {
  const BigReal tol = ctx.tolerance(10);
  BigReal worst = ctx.zero();
  unsigned worst_i = 0, worst_k = 0;
  for (unsigned i = 1; i <= 20; ++i)
    for (unsigned k = 1; k <= 5; ++k) {
      const BigReal lhs = eigenfunction_overlap(i, k, ctx) / sqrt(ctx.from_long(2));
      const BigReal rhs = quadrature_oracle(basis_function(i), k, ctx);
      const BigReal gap = abs(lhs - rhs);
      if (gap > worst) {
        worst = gap;
        worst_i = i;
        worst_k = k;
      }
    }
  add(report, "sine-moment recursion vs quadrature oracle (i<=20, k<=5)", worst <= tol,
      "max |recursion - quadrature| = " + worst.to_scientific(3) + " at (i=" +
          std::to_string(worst_i) + ", k=" + std::to_string(worst_k) + "), tolerance " +
          tol.to_scientific(3));
}

void check_duality(VerificationReport& report, const PrecisionContext& ctx) {
  const BigReal tol = ctx.tolerance(15);
  BigReal worst = ctx.zero();
  std::string worst_at = "-";
  bool ok = true;
  for (const ReferenceTable* ref : all_reference_tables()) {
    if (ref->model.kind == ModelKind::kStandard) continue;
    for (unsigned n = ref->n_min; n <= ref->n_max; ++n) {
      const SpectrumResult result = classify_null(solve(assemble(ref->model, n, ctx), ctx), ctx);
      const auto dual = duality_oracle_eigenvalues(n, ref->model, ctx);
      const auto order = result.presentation_order();
      const unsigned nonnull = n - result.null_count();
      for (unsigned k = 0; k < nonnull; ++k) {
        const BigReal& pencil = result.eigenvalues[order[k]];
        // dual holds D values; when N < D the pencil only realizes N of them.
        const BigReal& other = dual[k + (dual.size() - nonnull)];
        const BigReal rel = abs(pencil - other) / max(abs(other), ctx.from_long(1));
        if (rel > worst) {
          worst = rel;
          worst_at = ref->model.label() + " N=" + std::to_string(n);
        }
        if (rel > tol) ok = false;
      }
    }
  }
  add(report, "duality oracle: pencil vs DxD spectrum across all fixture ranges", ok,
      "max relative gap " + worst.to_scientific(3) + " at " + worst_at + ", tolerance " +
          tol.to_scientific(3));
}

void check_trace(VerificationReport& report, const PrecisionContext& ctx) {
  const BigReal tol = ctx.tolerance(12);
  bool ok = true;
  BigReal worst = ctx.zero();
  for (unsigned n : {4u, 8u, 12u}) {
    const SecularPair pair = assemble(ModelSpec::standard(), n, ctx);
    const SpectrumResult result = solve(pair, ctx);
    BigReal sum = ctx.zero();
    for (const auto& w : result.eigenvalues) sum += w;
    const BigReal rel = trace_identity_gap(pair, result, ctx) / max(abs(sum), ctx.from_long(1));
    worst = max(worst, rel);
    if (rel > tol) ok = false;
  }
  add(report, "trace identity tr(S^-1 H) = sum of eigenvalues", ok,
      "max relative gap " + worst.to_scientific(3) + ", tolerance " + tol.to_scientific(3));
}

void check_ritz_structure(VerificationReport& report, const PrecisionContext& ctx) {
  struct Case {
    ModelSpec model;
    unsigned n;
  };
  const std::vector<Case> cases = {
      {ModelSpec::projected(2), 10},
      {ModelSpec::weighted({Rational(1), Rational(2), Rational(3)}), 9},
      {ModelSpec::standard(), 4},
      {ModelSpec::standard(), 8},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const SecularPair pair = assemble(c.model, c.n, ctx);
    const SpectrumResult result = classify_null(solve(pair, ctx), ctx);
    const SpectralIdentityVerdict verdict = spectral_identity_check(result, pair, ctx);
    if (!verdict.pass) {
      ok = false;
      detail << c.model.label() << " N=" << c.n << " offdiag "
             << verdict.max_offdiag.to_scientific(3) << " gram "
             << verdict.max_gram_dev.to_scientific(3) << "; ";
    }
  }
  if (ok) detail << "C'HC diagonal and C'SC = I within 10^-(p-12) on all contract cases";
  add(report, "ritz structure: spectral identity on contract cases", ok, detail.str());
}

void check_cauchy_schwarz(VerificationReport& report, const PrecisionContext& ctx) {
  bool ok = true;
  BigReal worst_excess = -ctx.from_long(1);
  std::string at = "-";
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 1; n <= d; ++n)
      for (unsigned size = d; size <= 13; ++size) {
        const CauchySchwarzResult r = cauchy_schwarz_demo(n, d, size, ctx);
        const BigReal excess = r.quotient - r.reference;
        if (excess > worst_excess) {
          worst_excess = excess;
          at = "n=" + std::to_string(n) + " D=" + std::to_string(d) +
               " N=" + std::to_string(size);
        }
        if (!r.below) ok = false;
        // Both evaluation paths of the same quotient must agree.
        if (abs(r.quotient - r.bound) > ctx.tolerance(12) * max(ctx.from_long(1), abs(r.quotient)))
          ok = false;
      }
  add(report, "cauchy-schwarz: constrained quotients never exceed E_n (n<=D<=3, N<=13)", ok,
      "max quotient - E_n = " + worst_excess.to_scientific(3) + " at " + at);
}

void check_fixed_values(VerificationReport& report, const PrecisionContext& ctx) {
  // 480/pi^4 for the (n=1, D=1, N=1) quotient, 10 significant digits.
  const CauchySchwarzResult r = cauchy_schwarz_demo(1, 1, 1, ctx);
  const BigReal pi2 = ctx.pi() * ctx.pi();
  const BigReal expected = ctx.from_long(480) / (pi2 * pi2);
  const BigReal rel = abs(r.quotient - expected) / expected;
  const bool ok = rel <= ctx.pow10(-9) * ctx.from_long(5);
  add(report, "closed form: (n=1,D=1,N=1) quotient equals 480/pi^4", ok,
      "quotient " + format_significant(r.quotient, 10) + ", relative gap " +
          rel.to_scientific(3));
}

}  // namespace

VerificationReport run_verification(const PrecisionContext& ctx) {
  VerificationReport report;
  check_regressions(report, ctx);
  check_bounds(report, ctx);
  check_moment_oracle(report, ctx);
  check_duality(report, ctx);
  check_trace(report, ctx);
  check_ritz_structure(report, ctx);
  check_cauchy_schwarz(report, ctx);
  check_fixed_values(report, ctx);
  return report;
}

std::string render_report(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks)
    os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "\n       " << c.detail << "\n";
  os << "passed " << report.passed() << ", failed " << report.failed() << "\n";
  return os.str();
}

}  // namespace rrm
