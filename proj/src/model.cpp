#include "rrm/model.hpp"

#include <stdexcept>

namespace rrm {

ModelSpec ModelSpec::projected(unsigned d) {
  ModelSpec m;
  m.kind = ModelKind::kProjected;
  m.rank = d;
  m.validate();
  return m;
}

ModelSpec ModelSpec::weighted(std::vector<Rational> alphas) {
  ModelSpec m;
  m.kind = ModelKind::kWeighted;
  m.rank = static_cast<unsigned>(alphas.size());
  m.weights = std::move(alphas);
  m.validate();
  return m;
}

void ModelSpec::validate() const {
  switch (kind) {
    case ModelKind::kStandard:
      if (rank != 0 || !weights.empty())
        throw std::invalid_argument("ModelSpec: standard model takes no rank or weights");
      return;
    case ModelKind::kProjected:
      if (rank == 0) throw std::invalid_argument("ModelSpec: projected model needs rank >= 1");
      if (!weights.empty())
        throw std::invalid_argument("ModelSpec: projected model uses E_k, not explicit weights");
      return;
    case ModelKind::kWeighted:
      if (rank == 0 || weights.size() != rank)
        throw std::invalid_argument("ModelSpec: weighted model needs one weight per level");
      return;
  }
  throw std::invalid_argument("ModelSpec: unknown kind");
}

std::string ModelSpec::label() const {
  switch (kind) {
    case ModelKind::kStandard: return "standard";
    case ModelKind::kProjected: return "projected D=" + std::to_string(rank);
    case ModelKind::kWeighted: return "weighted D=" + std::to_string(rank);
  }
  return "?";
}

}  // namespace rrm
