#include "rrm/assembly.hpp"

#include <stdexcept>

#include "rrm/moments.hpp"
#include "rrm/polynomial.hpp"

namespace rrm {

namespace {

RationalMatrix gram_of(unsigned n, bool kinetic) {
  if (n == 0) throw std::invalid_argument("matrix assembly: basis size must be >= 1");
  std::vector<Polynomial> fn(n);
  for (unsigned i = 0; i < n; ++i) {
    fn[i] = basis_function(i + 1);
    if (kinetic) fn[i] = fn[i].derivative();
  }
  const Rational scale = kinetic ? Rational(1, 2) : Rational(1);
  RationalMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) {
      m(i, j) = scale * (fn[i] * fn[j]).integrate_unit();
      m(j, i) = m(i, j);
    }
  return m;
}

}  // namespace

RationalMatrix overlap_matrix(unsigned n) { return gram_of(n, false); }
RationalMatrix kinetic_matrix(unsigned n) { return gram_of(n, true); }

RealMatrix overlap_vectors(unsigned n, unsigned d, const PrecisionContext& ctx) {
  if (n == 0 || d == 0) throw std::invalid_argument("overlap_vectors: empty dimensions");
  const BigReal root2 = sqrt(ctx.from_long(2));
  RealMatrix v(n, d);
  for (unsigned k = 1; k <= d; ++k) {
    auto m = sine_moments(n + 1, k, ctx);
    for (unsigned i = 1; i <= n; ++i) v(i - 1, k - 1) = root2 * (m[i] - m[i + 1]);
  }
  return v;
}

std::vector<BigReal> model_weights(const ModelSpec& model, const PrecisionContext& ctx) {
  model.validate();
  if (model.kind == ModelKind::kStandard)
    throw std::invalid_argument("model_weights: standard model carries no weight list");
  std::vector<BigReal> w;
  w.reserve(model.rank);
  for (unsigned k = 1; k <= model.rank; ++k) {
    if (model.kind == ModelKind::kProjected) {
      const BigReal kpi = ctx.from_long(k) * ctx.pi();
      w.push_back(kpi * kpi / ctx.from_long(2));  // E_k = k²π²/2
    } else {
      w.push_back(ctx.from_rational(model.weights[k - 1]));
    }
  }
  return w;
}

RealMatrix projected_matrix(unsigned n, const ModelSpec& model, const PrecisionContext& ctx) {
  if (model.kind == ModelKind::kStandard)
    throw std::invalid_argument("projected_matrix: standard model has no projector");
  const RealMatrix v = overlap_vectors(n, model.rank, ctx);
  const auto w = model_weights(model, ctx);
  RealMatrix h(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) {
      BigReal acc = ctx.zero();
      for (unsigned k = 0; k < model.rank; ++k) acc += w[k] * v(i, k) * v(j, k);
      h(i, j) = acc;
      h(j, i) = acc;
    }
  return h;
}

SecularPair assemble(const ModelSpec& model, unsigned n, const PrecisionContext& ctx) {
  model.validate();
  if (n == 0) throw std::invalid_argument("assemble: basis size must be >= 1");

  SecularPair pair;
  pair.model = model;
  pair.basis_size = n;
  pair.overlap_exact = overlap_matrix(n);
  pair.overlap = RealMatrix(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      pair.overlap(i, j) = ctx.from_rational(pair.overlap_exact(i, j));

  if (model.kind == ModelKind::kStandard) {
    const RationalMatrix h = kinetic_matrix(n);
    pair.hamiltonian = RealMatrix(n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) pair.hamiltonian(i, j) = ctx.from_rational(h(i, j));
  } else {
    pair.hamiltonian = projected_matrix(n, model, ctx);
  }
  return pair;
}

}  // namespace rrm
