#pragma once

#include "rrm/matrix.hpp"
#include "rrm/model.hpp"

namespace rrm {

/// Exact Gram matrix S_ij = ⟨u_i|u_j⟩ of the trial basis, by symbolic
/// integration of the basis products (1-based basis indices map to 0-based
/// storage). S is symmetric positive definite for every n >= 1.
RationalMatrix overlap_matrix(unsigned n);

/// Exact kinetic matrix H_ij = 1/2 ⟨u_i'|u_j'⟩ (integrated-by-parts form;
/// the boundary terms vanish on the box walls).
RationalMatrix kinetic_matrix(unsigned n);

/// Overlap columns V_ik = ⟨u_i|ψ_k⟩, an n×d matrix at working precision.
RealMatrix overlap_vectors(unsigned n, unsigned d, const PrecisionContext& ctx);

/// Rank-d projected Hamiltonian in the trial basis:
/// (H_D)_ij = Σ_k w_k V_ik V_jk with w_k = k²π²/2 or the model's weights.
RealMatrix projected_matrix(unsigned n, const ModelSpec& model, const PrecisionContext& ctx);

/// Model weights w_1..w_D at working precision (projected: E_k; weighted: α_k).
std::vector<BigReal> model_weights(const ModelSpec& model, const PrecisionContext& ctx);

/// Both sides of the secular problem H c = W S c for one model and basis size.
struct SecularPair {
  ModelSpec model;
  unsigned basis_size = 0;
  RealMatrix hamiltonian;
  RealMatrix overlap;
  RationalMatrix overlap_exact;  // kept for exact-arithmetic cross-checks
};

SecularPair assemble(const ModelSpec& model, unsigned n, const PrecisionContext& ctx);

}  // namespace rrm
