#include "rrm/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace rrm {

CholeskyOutcome cholesky(const RealMatrix& a, const PrecisionContext& ctx) {
  const std::size_t n = a.rows();
  assert(a.cols() == n);
  CholeskyOutcome out;
  out.lower = RealMatrix(n, n);
  RealMatrix& l = out.lower;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l(i, j) = ctx.zero();

  for (std::size_t j = 0; j < n; ++j) {
    BigReal diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (diag.sign() <= 0) {
      out.ok = false;
      out.bad_pivot = static_cast<unsigned>(j);
      return out;
    }
    l(j, j) = sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      BigReal s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  out.ok = true;
  return out;
}

std::vector<BigReal> solve_lower(const RealMatrix& l, std::vector<BigReal> b) {
  const std::size_t n = l.rows();
  assert(b.size() == n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) b[i] -= l(i, k) * b[k];
    b[i] /= l(i, i);
  }
  return b;
}

std::vector<BigReal> solve_lower_transpose(const RealMatrix& l, std::vector<BigReal> b) {
  const std::size_t n = l.rows();
  assert(b.size() == n);
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) b[ii] -= l(k, ii) * b[k];
    b[ii] /= l(ii, ii);
  }
  return b;
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  assert(a.cols() == b.rows());
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      BigReal acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

BigReal frobenius_norm(const RealMatrix& a, const PrecisionContext& ctx) {
  BigReal acc = ctx.zero();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * a(i, j);
  return sqrt(acc);
}

BigReal off_diagonal_frobenius(const RealMatrix& a, const PrecisionContext& ctx) {
  BigReal acc = ctx.zero();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += a(i, j) * a(i, j);
  return sqrt(acc);
}

BigReal inf_norm(const RealMatrix& a, const PrecisionContext& ctx) {
  BigReal best = ctx.zero();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigReal row = ctx.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) row += abs(a(i, j));
    if (row > best) best = row;
  }
  return best;
}

JacobiOutcome jacobi_eigen(RealMatrix a, const PrecisionContext& ctx, unsigned max_sweeps) {
  const std::size_t n = a.rows();
  assert(a.cols() == n);

  JacobiOutcome out;
  out.vectors = RealMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.vectors(i, j) = ctx.from_long(i == j ? 1 : 0);

  const BigReal one = ctx.from_long(1);
  const BigReal threshold = ctx.tolerance(8) * frobenius_norm(a, ctx);

  while (out.sweeps < max_sweeps) {
    out.final_off_norm = off_diagonal_frobenius(a, ctx);
    if (out.final_off_norm <= threshold) {
      out.converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q).is_zero()) continue;
        // Rutishauser rotation: pick the smaller-angle root of tan.
        const BigReal theta = (a(q, q) - a(p, p)) / (ldexp2(a(p, q), 1));
        BigReal t = one / (abs(theta) + sqrt(theta * theta + one));
        if (theta.sign() < 0) t = -t;
        const BigReal c = one / sqrt(t * t + one);
        const BigReal s = t * c;
        const BigReal tau = s / (one + c);

        const BigReal apq = a(p, q);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = ctx.zero();
        a(q, p) = ctx.zero();
        for (std::size_t i = 0; i < n; ++i) {
          if (i != p && i != q) {
            const BigReal aip = a(i, p), aiq = a(i, q);
            a(i, p) = aip - s * (aiq + tau * aip);
            a(p, i) = a(i, p);
            a(i, q) = aiq + s * (aip - tau * aiq);
            a(q, i) = a(i, q);
          }
          const BigReal vip = out.vectors(i, p), viq = out.vectors(i, q);
          out.vectors(i, p) = vip - s * (viq + tau * vip);
          out.vectors(i, q) = viq + s * (vip - tau * viq);
        }
      }
    ++out.sweeps;
  }
  if (!out.converged) {
    out.final_off_norm = off_diagonal_frobenius(a, ctx);
    out.converged = out.final_off_norm <= threshold;
  }

  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(a(i, i));
  return out;
}

}  // namespace rrm
