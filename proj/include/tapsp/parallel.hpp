#pragma once

#include <cstddef>
#include <functional>

namespace tapsp {

/// Process-wide cap on worker threads used by the kernels (default 1).
void set_thread_count(std::size_t threads);
std::size_t thread_count();

/// Runs body(i) for i in [begin, end) split into contiguous chunks across the
/// configured threads. Bodies must write disjoint outputs; results never depend
/// on the thread count.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace tapsp
