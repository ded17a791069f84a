#pragma once

#include <cstddef>
#include <cstdint>

#include "tapsp/common.hpp"

namespace tapsp::simd {

namespace scalar {
void minplus_accumulate(Weight a, const Weight* b, Weight* c, std::size_t n);
void min_into(Weight* dst, const Weight* src, std::size_t n);
void truncate_inplace(Weight* row, Weight t, std::size_t n);
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}  // namespace scalar

#if defined(TAPSP_HAVE_AVX2_KERNELS)
namespace avx2 {
void minplus_accumulate(Weight a, const Weight* b, Weight* c, std::size_t n);
void min_into(Weight* dst, const Weight* src, std::size_t n);
void truncate_inplace(Weight* row, Weight t, std::size_t n);
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}  // namespace avx2
#endif

}  // namespace tapsp::simd
