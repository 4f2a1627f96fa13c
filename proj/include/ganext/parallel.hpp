#pragma once

#include <cstdint>
#include <functional>

namespace ganext {

// Number of compute threads (GANEXT_COMPUTE_THREADS overrides, default = hardware).
// Partitioning is over disjoint output ranges and every per-element reduction
// keeps a fixed accumulation order, so results are bitwise independent of the
// thread count.
int compute_threads();

// Runs fn(begin, end) over [0, n) split across the pool. Serial when the work
// is too small to amortize the wakeup, or when called from inside a parallel
// region.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn,
                  std::int64_t grain = 1024);

}  // namespace ganext
