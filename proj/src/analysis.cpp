#include "rrm/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrm {

BigReal box_level(unsigned k, const PrecisionContext& ctx) {
  const BigReal kpi = ctx.from_long(k) * ctx.pi();
  return kpi * kpi / ctx.from_long(2);
}

ConvergenceTable build_table(const ModelSpec& model, unsigned n_min, unsigned n_max,
                             unsigned levels, const PrecisionContext& ctx) {
  model.validate();
  if (n_min == 0 || n_min > n_max) throw std::invalid_argument("build_table: bad N range");
  if (levels == 0) throw std::invalid_argument("build_table: need at least one level");

  ConvergenceTable table;
  table.model = model;
  table.n_min = n_min;
  table.n_max = n_max;
  table.levels = levels;
  table.precision_digits = ctx.decimal_digits();

  for (unsigned n = n_min; n <= n_max; ++n) {
    const SecularPair pair = assemble(model, n, ctx);
    const SpectrumResult result = classify_null(solve(pair, ctx), ctx);
    const auto order = result.presentation_order();
    TableRow row;
    row.basis_size = n;
    row.null_count = result.null_count();
    const unsigned shown = std::min<unsigned>(levels, n - row.null_count);
    for (unsigned k = 0; k < shown; ++k) row.values.push_back(result.eigenvalues[order[k]]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

BoundReport verify_bounds(const ConvergenceTable& table, const PrecisionContext& ctx) {
  BoundReport report;
  const ModelSpec& model = table.model;
  const bool from_above = model.kind == ModelKind::kStandard;
  report.applicable = true;
  if (model.kind == ModelKind::kWeighted) {
    // The one-sided claim W_k <= alpha_k needs nonnegative weights in
    // ascending order; anything else gets no verdict.
    for (const auto& a : model.weights)
      if (a.sign() < 0) report.applicable = false;
    for (std::size_t k = 1; k < model.weights.size(); ++k)
      if (model.weights[k] < model.weights[k - 1]) report.applicable = false;
  }
  if (!report.applicable) return report;

  std::vector<BigReal> refs;  // reference per level, 1-based level k -> refs[k-1]
  const unsigned max_levels = model.kind == ModelKind::kStandard ? table.levels
                                                                 : std::min(table.levels, model.rank);
  for (unsigned k = 1; k <= max_levels; ++k)
    refs.push_back(model.kind == ModelKind::kWeighted ? ctx.from_rational(model.weights[k - 1])
                                                      : box_level(k, ctx));

  const BigReal tol = ctx.tolerance(15);
  report.all_bounds_ok = true;
  for (const auto& row : table.rows)
    for (unsigned k = 1; k <= std::min<unsigned>(max_levels, row.values.size()); ++k) {
      BoundEntry e;
      e.basis_size = row.basis_size;
      e.level = k;
      e.value = row.values[k - 1];
      e.reference = refs[k - 1];
      e.gap = e.value - e.reference;
      e.bound_ok = from_above ? e.gap >= -tol : e.gap <= tol;
      report.all_bounds_ok = report.all_bounds_ok && e.bound_ok;
      report.entries.push_back(std::move(e));
    }

  report.all_monotone_ok = true;
  for (unsigned k = 1; k <= max_levels; ++k) {
    bool ok = true;
    const BigReal* prev = nullptr;
    for (const auto& row : table.rows) {
      if (row.values.size() < k) continue;
      const BigReal& cur = row.values[k - 1];
      if (prev) {
        const BigReal step = cur - *prev;  // should shrink (standard) or grow
        if (from_above ? step > tol : step < -tol) ok = false;
      }
      prev = &cur;
    }
    report.monotone.emplace_back(k, ok);
    report.all_monotone_ok = report.all_monotone_ok && ok;
  }
  return report;
}

std::vector<BigReal> duality_oracle_eigenvalues(unsigned n, const ModelSpec& model,
                                                const PrecisionContext& ctx) {
  model.validate();
  if (model.kind == ModelKind::kStandard)
    throw std::invalid_argument("duality oracle: needs a rank-D model");
  const auto w = model_weights(model, ctx);
  for (const auto& wk : w)
    if (wk.sign() < 0)
      throw std::invalid_argument("duality oracle: negative weights break the symmetric form");

  const unsigned d = model.rank;
  const RealMatrix v = overlap_vectors(n, d, ctx);
  const RationalMatrix s_exact = overlap_matrix(n);
  RealMatrix s(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) s(i, j) = ctx.from_rational(s_exact(i, j));

  const CholeskyOutcome chol = cholesky(s, ctx);
  if (!chol.ok)
    throw SolverError(SolverFault::kNotPositiveDefinite, n, chol.bad_pivot,
                      "duality oracle: overlap Cholesky failed at pivot " +
                          std::to_string(chol.bad_pivot));
  RealMatrix x(n, d);  // X = S⁻¹ V
  std::vector<BigReal> col(n);
  for (unsigned k = 0; k < d; ++k) {
    for (unsigned i = 0; i < n; ++i) col[i] = v(i, k);
    col = solve_lower_transpose(chol.lower, solve_lower(chol.lower, std::move(col)));
    for (unsigned i = 0; i < n; ++i) x(i, k) = col[i];
  }

  RealMatrix g(d, d);
  const BigReal half = ctx.from_long(1) / ctx.from_long(2);
  for (unsigned k = 0; k < d; ++k)
    for (unsigned l = k; l < d; ++l) {
      BigReal t_kl = ctx.zero(), t_lk = ctx.zero();
      for (unsigned i = 0; i < n; ++i) {
        t_kl += v(i, k) * x(i, l);
        t_lk += v(i, l) * x(i, k);
      }
      g(k, l) = sqrt(w[k]) * sqrt(w[l]) * ((t_kl + t_lk) * half);
      g(l, k) = g(k, l);
    }

  JacobiOutcome jac = jacobi_eigen(std::move(g), ctx);
  if (!jac.converged)
    throw SolverError(SolverFault::kNoConvergence, d, jac.sweeps,
                      "duality oracle: Jacobi did not converge");
  std::sort(jac.values.begin(), jac.values.end());
  return jac.values;
}

BigReal trace_identity_gap(const SecularPair& pair, const SpectrumResult& result,
                           const PrecisionContext& ctx) {
  const unsigned n = pair.basis_size;
  const CholeskyOutcome chol = cholesky(pair.overlap, ctx);
  if (!chol.ok)
    throw SolverError(SolverFault::kNotPositiveDefinite, n, chol.bad_pivot,
                      "trace identity: overlap Cholesky failed");
  BigReal trace = ctx.zero();
  std::vector<BigReal> col(n);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) col[i] = pair.hamiltonian(i, j);
    col = solve_lower_transpose(chol.lower, solve_lower(chol.lower, std::move(col)));
    trace += col[j];
  }
  BigReal sum = ctx.zero();
  for (const auto& wj : result.eigenvalues) sum += wj;
  return abs(trace - sum);
}

CauchySchwarzResult cauchy_schwarz_demo(unsigned n, unsigned d, unsigned basis_size,
                                        const PrecisionContext& ctx) {
  if (n == 0 || n > d) throw std::invalid_argument("cauchy_schwarz_demo: need 1 <= n <= d");
  if (basis_size < d) throw std::invalid_argument("cauchy_schwarz_demo: need d <= N");
  const unsigned size = basis_size;

  const ModelSpec model = ModelSpec::projected(d);
  const SecularPair pair = assemble(model, size, ctx);
  const RealMatrix v = overlap_vectors(size, d, ctx);
  const CholeskyOutcome chol = cholesky(pair.overlap, ctx);
  if (!chol.ok)
    throw SolverError(SolverFault::kNotPositiveDefinite, size, chol.bad_pivot,
                      "cauchy_schwarz_demo: overlap Cholesky failed at pivot " +
                          std::to_string(chol.bad_pivot) + " (N=" + std::to_string(size) + ")");

  const auto best_approximant = [&](unsigned level) {
    std::vector<BigReal> c(size);
    for (unsigned i = 0; i < size; ++i) c[i] = v(i, level - 1);
    return solve_lower_transpose(chol.lower, solve_lower(chol.lower, std::move(c)));
  };
  const auto s_dot = [&](const std::vector<BigReal>& a, const std::vector<BigReal>& b) {
    BigReal acc = ctx.zero();
    for (unsigned i = 0; i < size; ++i)
      for (unsigned j = 0; j < size; ++j) acc += a[i] * pair.overlap(i, j) * b[j];
    return acc;
  };

  // Gram–Schmidt (S inner product) over the constraint directions k != n,
  // then sweep them out of the seed.
  std::vector<std::vector<BigReal>> constraints;
  for (unsigned k = 1; k <= d; ++k) {
    if (k == n) continue;
    auto b = best_approximant(k);
    for (const auto& q : constraints) {
      const BigReal proj = s_dot(q, b);
      for (unsigned i = 0; i < size; ++i) b[i] -= proj * q[i];
    }
    const BigReal norm2 = s_dot(b, b);
    if (norm2.sign() <= 0)
      throw SolverError(SolverFault::kDegenerateTrialState, size, k,
                        "cauchy_schwarz_demo: constraint direction collapsed");
    const BigReal inv = ctx.from_long(1) / sqrt(norm2);
    for (auto& bi : b) bi *= inv;
    constraints.push_back(std::move(b));
  }

  auto a = best_approximant(n);
  for (const auto& q : constraints) {
    const BigReal proj = s_dot(q, a);
    for (unsigned i = 0; i < size; ++i) a[i] -= proj * q[i];
  }

  const BigReal denom = s_dot(a, a);
  if (!(denom > ctx.tolerance(10)))
    throw SolverError(SolverFault::kDegenerateTrialState, size, n,
                      "cauchy_schwarz_demo: trial state has no S-norm left (N=" +
                          std::to_string(size) + ")");
  BigReal numer = ctx.zero();
  for (unsigned i = 0; i < size; ++i)
    for (unsigned j = 0; j < size; ++j) numer += a[i] * pair.hamiltonian(i, j) * a[j];

  BigReal psi_n_dot = ctx.zero();  // ⟨ψ_n|φ⟩ through the overlap columns
  for (unsigned i = 0; i < size; ++i) psi_n_dot += v(i, n - 1) * a[i];

  CauchySchwarzResult result;
  result.basis_size = size;
  result.reference = box_level(n, ctx);
  result.quotient = numer / denom;
  result.bound = result.reference * psi_n_dot * psi_n_dot / denom;
  result.below = result.quotient <= result.reference + ctx.tolerance(15);
  return result;
}

SpectralIdentityVerdict spectral_identity_check(const SpectrumResult& result,
                                                const SecularPair& pair,
                                                const PrecisionContext& ctx) {
  const PrecisionContext wide = PrecisionContext::unchecked(2 * ctx.decimal_digits());
  const RitzCheck check = ritz_vector_matrix_check(result, pair, wide);

  SpectralIdentityVerdict verdict;
  verdict.tolerance = wide.cast(ctx.tolerance(12));
  verdict.h_norm = inf_norm(pair.hamiltonian, ctx);
  verdict.max_offdiag = check.max_offdiag;
  verdict.max_gram_dev = check.max_gram_dev;
  verdict.max_value_dev = check.max_value_dev;
  verdict.max_residual = check.max_residual;

  const BigReal scaled = verdict.tolerance * wide.cast(verdict.h_norm);
  verdict.pass = check.max_gram_dev <= verdict.tolerance && check.max_offdiag <= scaled &&
                 check.max_value_dev <= scaled;
  return verdict;
}

}  // namespace rrm
