#include "tapsp/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace tapsp {

NegativeCycleError::NegativeCycleError(std::vector<Vertex> cycle)
    : Error([&] {
        std::string msg = "negative cycle:";
        for (Vertex v : cycle) msg += " " + std::to_string(v + 1);
        return msg;
      }()),
      cycle_(std::move(cycle)) {}

WeightMatrix WeightMatrix::identity(std::size_t n) {
  WeightMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;
  return m;
}

WeightMatrix WeightMatrix::select(std::span<const Vertex> rows, std::span<const Vertex> cols) const {
  WeightMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto src = row(static_cast<std::size_t>(rows[i]));
    auto dst = out.row(i);
    for (std::size_t j = 0; j < cols.size(); ++j) dst[j] = src[static_cast<std::size_t>(cols[j])];
  }
  return out;
}

void WeightMatrix::assign(std::span<const Vertex> rows, std::span<const Vertex> cols,
                          const WeightMatrix& block) {
  if (block.rows() != rows.size() || block.cols() != cols.size())
    throw ContractError("WeightMatrix::assign: block shape mismatch");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto dst = row(static_cast<std::size_t>(rows[i]));
    const auto src = block.row(i);
    for (std::size_t j = 0; j < cols.size(); ++j) dst[static_cast<std::size_t>(cols[j])] = src[j];
  }
}

Weight WeightMatrix::max_abs_finite() const {
  Weight best = 0;
  for (Weight e : data_)
    if (!is_inf(e)) best = std::max(best, e < 0 ? -e : e);
  return best;
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

std::size_t BoolMatrix::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<VertexPair> BoolMatrix::pairs() const {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return out;
}

bool BoolMatrix::subset_of(const BoolMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ContractError("BoolMatrix |=: shape mismatch");
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
  return *this;
}

}  // namespace tapsp
