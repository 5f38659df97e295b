#include "rrm/moments.hpp"

#include <stdexcept>

namespace rrm {

std::vector<BigReal> sine_moments(unsigned n_max, unsigned k, const PrecisionContext& ctx) {
  if (k == 0) throw std::invalid_argument("sine_moments: k must be >= 1");
  const BigReal kpi = ctx.from_long(static_cast<long>(k)) * ctx.pi();
  const BigReal inv = ctx.from_long(1) / kpi;
  const BigReal parity = ctx.from_long(k % 2 == 0 ? 1 : -1);  // (-1)^k

  std::vector<BigReal> moments;
  moments.reserve(n_max + 1);
  moments.push_back((ctx.from_long(1) - parity) * inv);          // I_0
  for (unsigned n = 1; n <= n_max; ++n) {
    BigReal cos_moment = ctx.zero();                             // C_{n-1}
    if (n >= 2)
      cos_moment = -(ctx.from_long(static_cast<long>(n) - 1) * inv * moments[n - 2]);
    moments.push_back(-(parity * inv) + ctx.from_long(static_cast<long>(n)) * inv * cos_moment);
  }
  return moments;
}

BigReal sine_moment(unsigned n, unsigned k, const PrecisionContext& ctx) {
  return sine_moments(n, k, ctx).back();
}

BigReal eigenfunction_overlap(unsigned i, unsigned k, const PrecisionContext& ctx) {
  if (i == 0) throw std::invalid_argument("eigenfunction_overlap: basis index must be >= 1");
  auto m = sine_moments(i + 1, k, ctx);
  return sqrt(ctx.from_long(2)) * (m[i] - m[i + 1]);
}

GaussLegendreRule::GaussLegendreRule(unsigned point_count, const PrecisionContext& ctx) {
  if (point_count == 0) throw std::invalid_argument("GaussLegendreRule: empty rule");
  const unsigned n = point_count;
  nodes_.assign(n, ctx.zero());
  weights_.assign(n, ctx.zero());

  const BigReal one = ctx.from_long(1);
  const BigReal half = one / ctx.from_long(2);
  // Stop Newton when the step is down at the last couple of bits.
  const BigReal step_floor = ldexp2(one, -static_cast<long>(ctx.bit_precision()) + 4);

  const unsigned pairs = n / 2;
  for (unsigned i = 0; i < pairs + (n % 2); ++i) {
    // Seed: cos(π (i + 3/4) / (n + 1/2)), the classic asymptotic root estimate.
    BigReal z = cos(ctx.pi() * (ctx.from_long(4 * static_cast<long>(i) + 3) /
                                ctx.from_long(4 * static_cast<long>(n) + 2)));
    BigReal deriv = ctx.zero();
    for (int iter = 0; iter < 200; ++iter) {
      BigReal p_curr = one, p_prev = ctx.zero();
      for (unsigned j = 1; j <= n; ++j) {
        BigReal p_old = p_prev;
        p_prev = p_curr;
        p_curr = (ctx.from_long(2 * static_cast<long>(j) - 1) * z * p_prev -
                  ctx.from_long(static_cast<long>(j) - 1) * p_old) /
                 ctx.from_long(static_cast<long>(j));
      }
      deriv = ctx.from_long(static_cast<long>(n)) * (z * p_curr - p_prev) / (z * z - one);
      const BigReal step = p_curr / deriv;
      z = z - step;
      if (abs(step) <= step_floor * max(abs(z), one)) break;
    }
    const BigReal w = ctx.from_long(2) / ((one - z * z) * deriv * deriv);
    nodes_[i] = (one - z) * half;        // ascending from the left edge
    weights_[i] = w * half;
    nodes_[n - 1 - i] = (one + z) * half;
    weights_[n - 1 - i] = w * half;
  }
}

BigReal quadrature_oracle(const Polynomial& p, unsigned k, const PrecisionContext& ctx,
                          unsigned points) {
  if (k == 0) throw std::invalid_argument("quadrature_oracle: k must be >= 1");
  GaussLegendreRule rule(points, ctx);
  std::vector<BigReal> coeff;
  coeff.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeff.push_back(ctx.from_rational(c));

  const BigReal kpi = ctx.from_long(static_cast<long>(k)) * ctx.pi();
  BigReal acc = ctx.zero();
  for (unsigned i = 0; i < rule.size(); ++i) {
    const BigReal& x = rule.nodes()[i];
    BigReal val = ctx.zero();
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) val = val * x + *it;
    acc += rule.weights()[i] * val * sin(kpi * x);
  }
  return acc;
}

}  // namespace rrm
