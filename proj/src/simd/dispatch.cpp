#include <atomic>
#include <cstdlib>
#include <string>

#include "simd/kernels_impl.hpp"
#include "tapsp/simd.hpp"

namespace tapsp::simd {

namespace {

bool cpu_has_avx2() {
#if defined(TAPSP_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("TAPSP_SIMD")) {
    if (auto isa = parse_isa(env); isa && supported(*isa)) return *isa;
  }
  return best_supported();
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{initial_isa()};
  return slot;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw ContractError("simd kernel: length mismatch");
}

[[maybe_unused]] bool use_avx2(Isa isa) {
  if (isa != Isa::avx2) return false;
  if (!supported(Isa::avx2)) throw ContractError("instruction set not available: avx2");
  return true;
}

}  // namespace

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

Isa best_supported() { return supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active() { return active_slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (!supported(isa)) throw ContractError("instruction set not available: " + std::string(name(isa)));
  active_slot().store(isa);
}

std::string_view name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::optional<Isa> parse_isa(std::string_view text) {
  if (text == "scalar") return Isa::scalar;
  if (text == "avx2") return Isa::avx2;
  return std::nullopt;
}

void minplus_accumulate(Weight a, std::span<const Weight> b, std::span<Weight> c, Isa isa) {
  check_sizes(b.size(), c.size());
#if defined(TAPSP_HAVE_AVX2_KERNELS)
  if (use_avx2(isa)) return avx2::minplus_accumulate(a, b.data(), c.data(), c.size());
#endif
  (void)isa;
  scalar::minplus_accumulate(a, b.data(), c.data(), c.size());
}

void min_into(std::span<Weight> dst, std::span<const Weight> src, Isa isa) {
  check_sizes(dst.size(), src.size());
#if defined(TAPSP_HAVE_AVX2_KERNELS)
  if (use_avx2(isa)) return avx2::min_into(dst.data(), src.data(), dst.size());
#endif
  (void)isa;
  scalar::min_into(dst.data(), src.data(), dst.size());
}

void truncate_inplace(std::span<Weight> row, Weight t, Isa isa) {
#if defined(TAPSP_HAVE_AVX2_KERNELS)
  if (use_avx2(isa)) return avx2::truncate_inplace(row.data(), t, row.size());
#endif
  (void)isa;
  scalar::truncate_inplace(row.data(), t, row.size());
}

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Isa isa) {
  check_sizes(dst.size(), src.size());
#if defined(TAPSP_HAVE_AVX2_KERNELS)
  if (use_avx2(isa)) return avx2::or_into(dst.data(), src.data(), dst.size());
#endif
  (void)isa;
  scalar::or_into(dst.data(), src.data(), dst.size());
}

}  // namespace tapsp::simd
