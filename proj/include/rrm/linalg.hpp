#pragma once

#include <vector>

#include "rrm/matrix.hpp"

namespace rrm {

/// Cholesky A = L Lᵀ for symmetric positive definite A. `ok` is false when a
/// pivot fails to stay positive at working precision; `bad_pivot` then holds
/// its zero-based index.
struct CholeskyOutcome {
  bool ok = false;
  unsigned bad_pivot = 0;
  RealMatrix lower;
};
CholeskyOutcome cholesky(const RealMatrix& a, const PrecisionContext& ctx);

std::vector<BigReal> solve_lower(const RealMatrix& l, std::vector<BigReal> b);            // L y = b
std::vector<BigReal> solve_lower_transpose(const RealMatrix& l, std::vector<BigReal> b);  // Lᵀ x = b

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);

BigReal frobenius_norm(const RealMatrix& a, const PrecisionContext& ctx);
BigReal off_diagonal_frobenius(const RealMatrix& a, const PrecisionContext& ctx);
BigReal inf_norm(const RealMatrix& a, const PrecisionContext& ctx);  // max absolute row sum

/// Row-cyclic Jacobi for a symmetric matrix. Sweeps until the off-diagonal
/// Frobenius norm drops below 10^-(p-8) times the initial Frobenius norm,
/// hard-capped at `max_sweeps`. Eigenvectors are the columns of `vectors`,
/// unsorted (column j pairs with values[j]).
struct JacobiOutcome {
  std::vector<BigReal> values;
  RealMatrix vectors;
  unsigned sweeps = 0;
  bool converged = false;
  BigReal final_off_norm;  // off-diagonal Frobenius norm when iteration stopped
};
JacobiOutcome jacobi_eigen(RealMatrix a, const PrecisionContext& ctx, unsigned max_sweeps = 40);

}  // namespace rrm
