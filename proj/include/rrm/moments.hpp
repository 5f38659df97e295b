#pragma once

#include <vector>

#include "rrm/bigreal.hpp"
#include "rrm/polynomial.hpp"

namespace rrm {

/// I_n(k) = ∫₀¹ xⁿ sin(kπx) dx for k >= 1, via the two-term recursion
///   I_0 = (1-(-1)^k)/(kπ),
///   I_n = -(-1)^k/(kπ) + (n/(kπ)) C_{n-1},  C_m = -(m/(kπ)) I_{m-1},  C_0 = 0.
/// Exact in exact arithmetic; at working precision every step is one rounding.
BigReal sine_moment(unsigned n, unsigned k, const PrecisionContext& ctx);

/// The whole prefix I_0..I_n in one pass (what matrix assembly wants).
std::vector<BigReal> sine_moments(unsigned n_max, unsigned k, const PrecisionContext& ctx);

/// ⟨u_i|ψ_k⟩ = √2 (I_i(k) - I_{i+1}(k)) with ψ_k(x) = √2 sin(kπx), i >= 1.
BigReal eigenfunction_overlap(unsigned i, unsigned k, const PrecisionContext& ctx);

/// Gauss–Legendre nodes/weights on [0,1], computed at context precision
/// (Newton on the Legendre recurrence from cosine seeds).
class GaussLegendreRule {
 public:
  GaussLegendreRule(unsigned point_count, const PrecisionContext& ctx);
  unsigned size() const { return static_cast<unsigned>(nodes_.size()); }
  const std::vector<BigReal>& nodes() const { return nodes_; }
  const std::vector<BigReal>& weights() const { return weights_; }

 private:
  std::vector<BigReal> nodes_, weights_;
};

/// ∫₀¹ p(x) sin(kπx) dx by fixed-order quadrature. Independent of the
/// recursion path on purpose: it is the cross-check oracle.
BigReal quadrature_oracle(const Polynomial& p, unsigned k, const PrecisionContext& ctx,
                          unsigned points = 64);

}  // namespace rrm
