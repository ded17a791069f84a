#include "simd/kernels_impl.hpp"

namespace tapsp::simd::scalar {

void minplus_accumulate(Weight a, const Weight* b, Weight* c, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (is_inf(b[j])) continue;
    const Weight s = a + b[j];
    if (s < c[j]) c[j] = s;
  }
}

void min_into(Weight* dst, const Weight* src, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j)
    if (src[j] < dst[j]) dst[j] = src[j];
}

void truncate_inplace(Weight* row, Weight t, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j)
    if (row[j] > t || row[j] < -t) row[j] = kInf;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t w = 0; w < n; ++w) dst[w] |= src[w];
}

}  // namespace tapsp::simd::scalar
