#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "rrm/bigreal.hpp"
#include "rrm/rational.hpp"

namespace rrm {

/// Minimal dense row-major matrix; just the storage the solver needs.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return d_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return d_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

using RationalMatrix = DenseMatrix<Rational>;
using RealMatrix = DenseMatrix<BigReal>;

}  // namespace rrm
