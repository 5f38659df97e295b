#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rrm/assembly.hpp"
#include "rrm/linalg.hpp"

namespace rrm {

enum class SolverFault {
  kNotPositiveDefinite,   // Cholesky pivot lost positivity at working precision
  kNoConvergence,         // Jacobi missed the threshold within the sweep cap
  kDegenerateTrialState,  // trial vector with (numerically) zero S-norm
};
const char* to_string(SolverFault fault);

class SolverError : public std::runtime_error {
 public:
  SolverError(SolverFault fault, unsigned basis_size, unsigned index, const std::string& what_arg)
      : std::runtime_error(what_arg), fault_(fault), basis_size_(basis_size), index_(index) {}
  SolverFault fault() const { return fault_; }
  unsigned basis_size() const { return basis_size_; }
  /// Failed pivot index (kNotPositiveDefinite) or sweeps spent (kNoConvergence).
  unsigned index() const { return index_; }

 private:
  SolverFault fault_;
  unsigned basis_size_;
  unsigned index_;
};

/// Solution of H c = W S c. Eigenvalues ascending; coefficient column j pairs
/// with eigenvalues[j], S-normalized, sign fixed so the first significant
/// component is positive. null_flags stays all-false until classify_null runs.
struct SpectrumResult {
  ModelSpec model;
  unsigned basis_size = 0;
  std::vector<BigReal> eigenvalues;
  RealMatrix coefficients;
  std::vector<bool> null_flags;

  unsigned null_count() const;
  /// Indices in presentation order: non-null ascending, then null levels.
  std::vector<unsigned> presentation_order() const;
};

/// The pinned reduction: Cholesky S = LLᵀ, A = L⁻¹HL⁻ᵀ (symmetrized), cyclic
/// Jacobi, back-substitution, S-normalization, sign fix, ascending sort.
/// Throws SolverError on a failed pivot or non-convergence.
SpectrumResult solve(const SecularPair& pair, const PrecisionContext& ctx);

/// Marks eigenvalues with |W| <= 10⁻²⁰ · max(1, max|W_j|) as null-space levels.
SpectrumResult classify_null(SpectrumResult result, const PrecisionContext& ctx);

/// Diagnostic matrices for a solved spectrum, measured at ctx precision (pass
/// a wider context than the solve used to see the solver's own error floor):
/// hmat = CᵀHC (diag(W) in exact arithmetic), gram = CᵀSC (identity ditto).
struct RitzCheck {
  RealMatrix hmat;
  RealMatrix gram;
  BigReal max_offdiag;    // max |hmat_ij|, i != j
  BigReal max_gram_dev;   // max |gram_ij - δ_ij|
  BigReal max_value_dev;  // max |hmat_jj - W_j|
  BigReal max_residual;   // max entry of |HC - SC·diag(W)|
};
RitzCheck ritz_vector_matrix_check(const SpectrumResult& result, const SecularPair& pair,
                                   const PrecisionContext& ctx);

}  // namespace rrm
