#include "tapsp/counters.hpp"

#include <atomic>

namespace tapsp {

namespace {
std::atomic<std::uint64_t> g_ring{0};
std::atomic<std::uint64_t> g_relax{0};
std::atomic<std::uint64_t> g_ors{0};
}  // namespace

OpCounts op_counts() {
  return {g_ring.load(std::memory_order_relaxed), g_relax.load(std::memory_order_relaxed),
          g_ors.load(std::memory_order_relaxed)};
}

void reset_op_counts() {
  g_ring.store(0);
  g_relax.store(0);
  g_ors.store(0);
}

namespace detail {
void add_ring_mults(std::uint64_t n) { g_ring.fetch_add(n, std::memory_order_relaxed); }
void add_minplus_relax(std::uint64_t n) { g_relax.fetch_add(n, std::memory_order_relaxed); }
void add_bool_row_ors(std::uint64_t n) { g_ors.fetch_add(n, std::memory_order_relaxed); }
}  // namespace detail

}  // namespace tapsp
