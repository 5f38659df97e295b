#pragma once

#include "rrm/eigensolver.hpp"

namespace rrm {

/// One table row: the displayed levels (presentation order, i.e. non-null
/// ascending) and how many null-space eigenvalues the solve produced.
struct TableRow {
  unsigned basis_size = 0;
  std::vector<BigReal> values;
  unsigned null_count = 0;
};

struct ConvergenceTable {
  ModelSpec model;
  unsigned n_min = 0, n_max = 0, levels = 0;
  unsigned precision_digits = 0;
  std::vector<TableRow> rows;
};

/// Solves the model for every N in [n_min, n_max] and keeps the lowest
/// `levels` non-null eigenvalues per row (fewer if the rank runs out).
ConvergenceTable build_table(const ModelSpec& model, unsigned n_min, unsigned n_max,
                             unsigned levels, const PrecisionContext& ctx);

/// Bound dichotomy per displayed entry. Standard model: W_k >= E_k and rows
/// shrink as N grows. Projected: W_k <= E_k, rows grow. Weighted with all
/// alphas nonnegative: W_k <= alpha_k, rows grow. Weighted with a negative
/// weight: no one-sided claim holds, the report is marked not applicable.
struct BoundEntry {
  unsigned basis_size = 0;
  unsigned level = 0;  // k, 1-based
  BigReal value;       // W_k(N)
  BigReal reference;   // E_k or alpha_k
  BigReal gap;         // value - reference
  bool bound_ok = false;
};
struct BoundReport {
  bool applicable = false;
  std::vector<BoundEntry> entries;
  std::vector<std::pair<unsigned, bool>> monotone;  // level -> verdict across N
  bool all_bounds_ok = false;
  bool all_monotone_ok = false;
};
BoundReport verify_bounds(const ConvergenceTable& table, const PrecisionContext& ctx);

/// E_k = k²π²/2 at working precision.
BigReal box_level(unsigned k, const PrecisionContext& ctx);

/// Independent spectrum for a rank-D model with nonnegative weights: the D×D
/// dual matrix G_kl = √(w_k w_l)·(VᵀS⁻¹V)_kl carries exactly the non-null
/// eigenvalues of the N×N pencil. Returned ascending.
std::vector<BigReal> duality_oracle_eigenvalues(unsigned n, const ModelSpec& model,
                                                const PrecisionContext& ctx);

/// |tr(S⁻¹H) - Σ_j W_j|; zero in exact arithmetic.
BigReal trace_identity_gap(const SecularPair& pair, const SpectrumResult& result,
                           const PrecisionContext& ctx);

/// Rayleigh quotient of one constrained trial state: seed with the best
/// in-span approximant of ψ_n, sweep out the other projector levels k <= d
/// (Gram–Schmidt in the S inner product), and evaluate ⟨φ|H_D|φ⟩/⟨φ|φ⟩ twice —
/// through the assembled H_D (quotient) and through the overlap identity
/// E_n|⟨ψ_n|φ⟩|²/⟨φ|φ⟩ (bound path). Cauchy–Schwarz caps both at E_n.
struct CauchySchwarzResult {
  unsigned basis_size = 0;
  BigReal quotient;
  BigReal bound;      // overlap-path value of the same quantity
  BigReal reference;  // E_n
  bool below = false;
};
CauchySchwarzResult cauchy_schwarz_demo(unsigned n, unsigned d, unsigned basis_size,
                                        const PrecisionContext& ctx);

/// Ritz-structure gate at doubled measurement precision: CᵀHC equals diag(W)
/// entrywise within 10^-(p-12)·‖H‖∞, and CᵀSC equals the identity within
/// 10^-(p-12) (which makes the null-flagged levels the S-orthogonal
/// complement of the rest). The residual is reported but does not gate.
struct SpectralIdentityVerdict {
  bool pass = false;
  BigReal tolerance;
  BigReal h_norm;
  BigReal max_offdiag;
  BigReal max_gram_dev;
  BigReal max_value_dev;
  BigReal max_residual;
};
SpectralIdentityVerdict spectral_identity_check(const SpectrumResult& result,
                                                const SecularPair& pair,
                                                const PrecisionContext& ctx);

}  // namespace rrm
