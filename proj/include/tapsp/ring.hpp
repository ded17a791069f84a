#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace tapsp {

/// Dense matrix of arbitrary-precision integers.
class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

enum class RingKernel { schoolbook, strassen };

struct RingOptions {
  RingKernel kernel = RingKernel::schoolbook;
  /// Strassen recursion falls back to schoolbook at or below this dimension.
  std::size_t strassen_cutoff = 64;
};

/// Exact integer matrix product. Both kernels return identical matrices.
BigMatrix ring_matmul(const BigMatrix& a, const BigMatrix& b, const RingOptions& options = {});

}  // namespace tapsp
