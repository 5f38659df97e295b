#pragma once

#include <string>
#include <vector>

#include "rrm/rational.hpp"

namespace rrm {

enum class ModelKind {
  kStandard,   // H = -1/2 d²/dx² on [0,1], Dirichlet walls
  kProjected,  // H_D = Σ_{k<=D} E_k |ψ_k⟩⟨ψ_k|, E_k = k²π²/2
  kWeighted,   // H_D = Σ_{k<=D} α_k |ψ_k⟩⟨ψ_k|, caller-chosen real α_k
};

/// Which Hamiltonian the secular problem is built for. Weights are kept exact
/// (rationals parsed from decimal strings) so assembly stays one-rounding.
struct ModelSpec {
  ModelKind kind = ModelKind::kStandard;
  unsigned rank = 0;              // D; 0 for the standard model
  std::vector<Rational> weights;  // only for kWeighted, size == rank

  static ModelSpec standard() { return {}; }
  static ModelSpec projected(unsigned d);
  static ModelSpec weighted(std::vector<Rational> alphas);

  /// Throws std::invalid_argument when the fields are inconsistent.
  void validate() const;
  std::string label() const;  // "standard", "projected D=2", "weighted D=3"
};

}  // namespace rrm
