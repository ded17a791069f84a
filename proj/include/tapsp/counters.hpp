#pragma once

#include <cstdint>

namespace tapsp {

/// Operation counts accumulated by the kernels since the last reset.
struct OpCounts {
  std::uint64_t ring_mults = 0;       // big-integer multiply-adds in ring_matmul
  std::uint64_t minplus_relax = 0;    // a + b candidate evaluations in naive min-plus
  std::uint64_t bool_row_ors = 0;     // row OR operations in bitset Boolean products
};

OpCounts op_counts();
void reset_op_counts();

namespace detail {
void add_ring_mults(std::uint64_t n);
void add_minplus_relax(std::uint64_t n);
void add_bool_row_ors(std::uint64_t n);
}  // namespace detail

}  // namespace tapsp
