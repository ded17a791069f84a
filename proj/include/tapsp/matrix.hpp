#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tapsp/common.hpp"

namespace tapsp {

/// Dense row-major matrix over Z ∪ {+inf}. +inf is stored as kInf and is absorbing.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols, Weight fill = kInf)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Identity of the min-plus semiring: 0 on the diagonal, +inf elsewhere.
  static WeightMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Weight& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Weight operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Weight> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Weight> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Weight> data() const { return data_; }

  /// Submatrix with the given row and column index lists.
  WeightMatrix select(std::span<const Vertex> rows, std::span<const Vertex> cols) const;
  /// Writes `block` into the positions named by the index lists.
  void assign(std::span<const Vertex> rows, std::span<const Vertex> cols, const WeightMatrix& block);

  /// Largest |e| over finite entries, 0 when there are none.
  Weight max_abs_finite() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Weight> data_;
};

/// Boolean matrix with bit-packed rows.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  static BoolMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    auto& word = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    word = value ? (word | mask) : (word & ~mask);
  }

  std::span<std::uint64_t> row_words(std::size_t i) { return {bits_.data() + i * words_, words_}; }
  std::span<const std::uint64_t> row_words(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t count() const;
  bool all() const { return count() == rows_ * cols_; }
  bool none() const { return count() == 0; }
  /// True pairs in row-major order.
  std::vector<VertexPair> pairs() const;
  /// Entrywise "this implies other".
  bool subset_of(const BoolMatrix& other) const;

  BoolMatrix& operator|=(const BoolMatrix& other);

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Square matrix whose entries are polynomials with 0/1 coefficients. Coefficient
/// plane q holds the matrix of x^q coefficients; all entries share the degree bound.
struct PolyMatrix {
  std::size_t n = 0;
  std::vector<BoolMatrix> coeffs;

  std::size_t terms() const { return coeffs.size(); }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

}  // namespace tapsp
