#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "tapsp/common.hpp"

// Row kernels behind every inner loop of the min-plus and Boolean products.
// Each kernel has a scalar reference version and an AVX2 version; the active one
// is picked at runtime from CPUID, and can be pinned with TAPSP_SIMD=scalar|avx2
// or set_active(). All versions produce bit-identical results.

namespace tapsp::simd {

enum class Isa { scalar, avx2 };

bool supported(Isa isa);
Isa best_supported();
Isa active();
/// Throws ContractError when the CPU (or build) lacks the instruction set.
void set_active(Isa isa);

std::string_view name(Isa isa);
std::optional<Isa> parse_isa(std::string_view text);

/// c[j] = min(c[j], a + b[j]) with +inf absorbing. a must be finite.
void minplus_accumulate(Weight a, std::span<const Weight> b, std::span<Weight> c, Isa isa);
/// dst[j] = min(dst[j], src[j]).
void min_into(std::span<Weight> dst, std::span<const Weight> src, Isa isa);
/// Replaces entries with |e| > t by +inf.
void truncate_inplace(std::span<Weight> row, Weight t, Isa isa);
/// dst[w] |= src[w].
void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Isa isa);

inline void minplus_accumulate(Weight a, std::span<const Weight> b, std::span<Weight> c) {
  minplus_accumulate(a, b, c, active());
}
inline void min_into(std::span<Weight> dst, std::span<const Weight> src) {
  min_into(dst, src, active());
}
inline void truncate_inplace(std::span<Weight> row, Weight t) { truncate_inplace(row, t, active()); }
inline void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  or_into(dst, src, active());
}

}  // namespace tapsp::simd
