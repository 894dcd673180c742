#pragma once

#include <cstddef>
#include <functional>

namespace evenfix {

/// Worker count used by the parallel loops in this library. Resolved from
/// set_thread_count() if called, else EVENFIX_THREADS, else 1.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write results into per-index slots so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace evenfix
