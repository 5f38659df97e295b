#include "rrm/eigensolver.hpp"

#include <algorithm>
#include <numeric>

namespace rrm {

const char* to_string(SolverFault fault) {
  switch (fault) {
    case SolverFault::kNotPositiveDefinite: return "overlap matrix not positive definite";
    case SolverFault::kNoConvergence: return "Jacobi sweep cap exceeded";
    case SolverFault::kDegenerateTrialState: return "degenerate trial state";
  }
  return "unknown fault";
}

unsigned SpectrumResult::null_count() const {
  return static_cast<unsigned>(std::count(null_flags.begin(), null_flags.end(), true));
}

std::vector<unsigned> SpectrumResult::presentation_order() const {
  std::vector<unsigned> order;
  order.reserve(eigenvalues.size());
  for (unsigned j = 0; j < eigenvalues.size(); ++j)
    if (!null_flags[j]) order.push_back(j);
  for (unsigned j = 0; j < eigenvalues.size(); ++j)
    if (null_flags[j]) order.push_back(j);
  return order;
}

namespace {

RealMatrix lift(const RealMatrix& a, const PrecisionContext& ctx) {
  RealMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ctx.cast(a(i, j));
  return r;
}

}  // namespace

SpectrumResult solve(const SecularPair& pair, const PrecisionContext& ctx) {
  const unsigned n = pair.basis_size;

  const CholeskyOutcome chol = cholesky(pair.overlap, ctx);
  if (!chol.ok)
    throw SolverError(SolverFault::kNotPositiveDefinite, n, chol.bad_pivot,
                      "eigensolver: " + std::string(to_string(SolverFault::kNotPositiveDefinite)) +
                          " at working precision (" + std::to_string(ctx.decimal_digits()) +
                          " digits): pivot " + std::to_string(chol.bad_pivot) + " of N=" +
                          std::to_string(n) + ", model " + pair.model.label());
  const RealMatrix& l = chol.lower;

  // B = L⁻¹ H (column by column), then A = (L⁻¹ Bᵀ)ᵀ = B L⁻ᵀ, symmetrized.
  RealMatrix b(n, n);
  std::vector<BigReal> col(n);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) col[i] = pair.hamiltonian(i, j);
    col = solve_lower(l, std::move(col));
    for (unsigned i = 0; i < n; ++i) b(i, j) = col[i];
  }
  RealMatrix a(n, n);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) col[i] = b(j, i);
    col = solve_lower(l, std::move(col));
    for (unsigned i = 0; i < n; ++i) a(j, i) = col[i];
  }
  const BigReal half = ctx.from_long(1) / ctx.from_long(2);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      a(i, j) = (a(i, j) + a(j, i)) * half;
      a(j, i) = a(i, j);
    }

  JacobiOutcome jac = jacobi_eigen(std::move(a), ctx);
  if (!jac.converged)
    throw SolverError(SolverFault::kNoConvergence, n, jac.sweeps,
                      "eigensolver: " + std::string(to_string(SolverFault::kNoConvergence)) +
                          " after " + std::to_string(jac.sweeps) +
                          " sweeps, off-diagonal norm " + jac.final_off_norm.to_scientific(3) +
                          " (N=" + std::to_string(n) + ", model " + pair.model.label() + ")");

  SpectrumResult result;
  result.model = pair.model;
  result.basis_size = n;
  result.coefficients = RealMatrix(n, n);
  result.null_flags.assign(n, false);

  // Back-transform c = L⁻ᵀ v, then S-normalize and fix the sign convention.
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) col[i] = jac.vectors(i, j);
    col = solve_lower_transpose(l, std::move(col));

    std::vector<BigReal> sc(n, ctx.zero());
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < n; ++k) sc[i] += pair.overlap(i, k) * col[k];
    BigReal norm2 = ctx.zero();
    for (unsigned i = 0; i < n; ++i) norm2 += col[i] * sc[i];
    if (norm2.sign() <= 0)
      throw SolverError(SolverFault::kDegenerateTrialState, n, j,
                        "eigensolver: back-transformed vector " + std::to_string(j) +
                            " lost its S-norm (N=" + std::to_string(n) + ")");
    const BigReal inv_norm = ctx.from_long(1) / sqrt(norm2);
    for (unsigned i = 0; i < n; ++i) col[i] *= inv_norm;

    BigReal peak = ctx.zero();
    for (unsigned i = 0; i < n; ++i) peak = max(peak, abs(col[i]));
    const BigReal significant = ldexp2(peak, -16);
    int sign = 1;
    for (unsigned i = 0; i < n; ++i)
      if (abs(col[i]) >= significant) {
        sign = col[i].sign();
        break;
      }
    for (unsigned i = 0; i < n; ++i)
      result.coefficients(i, j) = sign < 0 ? -col[i] : col[i];
  }
  result.eigenvalues = std::move(jac.values);

  // Ascending eigenvalue order, applied to values and coefficient columns.
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(), [&](unsigned x, unsigned y) {
    return result.eigenvalues[x] < result.eigenvalues[y];
  });
  std::vector<BigReal> sorted_vals;
  sorted_vals.reserve(n);
  RealMatrix sorted_coef(n, n);
  for (unsigned j = 0; j < n; ++j) {
    sorted_vals.push_back(result.eigenvalues[perm[j]]);
    for (unsigned i = 0; i < n; ++i) sorted_coef(i, j) = result.coefficients(i, perm[j]);
  }
  result.eigenvalues = std::move(sorted_vals);
  result.coefficients = std::move(sorted_coef);
  return result;
}

SpectrumResult classify_null(SpectrumResult result, const PrecisionContext& ctx) {
  BigReal peak = ctx.from_long(1);
  for (const auto& w : result.eigenvalues) peak = max(peak, abs(w));
  const BigReal threshold = ctx.pow10(-20) * peak;
  for (std::size_t j = 0; j < result.eigenvalues.size(); ++j)
    result.null_flags[j] = abs(result.eigenvalues[j]) <= threshold;
  return result;
}

RitzCheck ritz_vector_matrix_check(const SpectrumResult& result, const SecularPair& pair,
                                   const PrecisionContext& ctx) {
  const unsigned n = pair.basis_size;
  const RealMatrix c = lift(result.coefficients, ctx);
  const RealMatrix h = lift(pair.hamiltonian, ctx);
  const RealMatrix s = lift(pair.overlap, ctx);
  const RealMatrix ct = transpose(c);

  RitzCheck check{matmul(ct, matmul(h, c)), matmul(ct, matmul(s, c)),
                  ctx.zero(), ctx.zero(), ctx.zero(), ctx.zero()};
  const BigReal one = ctx.from_long(1);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i != j) check.max_offdiag = max(check.max_offdiag, abs(check.hmat(i, j)));
      const BigReal dev = i == j ? abs(check.gram(i, j) - one) : abs(check.gram(i, j));
      check.max_gram_dev = max(check.max_gram_dev, dev);
    }
  for (unsigned j = 0; j < n; ++j)
    check.max_value_dev =
        max(check.max_value_dev, abs(check.hmat(j, j) - ctx.cast(result.eigenvalues[j])));

  const RealMatrix hc = matmul(h, c);
  const RealMatrix sc = matmul(s, c);
  for (unsigned j = 0; j < n; ++j) {
    const BigReal w = ctx.cast(result.eigenvalues[j]);
    for (unsigned i = 0; i < n; ++i)
      check.max_residual = max(check.max_residual, abs(hc(i, j) - w * sc(i, j)));
  }
  return check;
}

}  // namespace rrm
