#pragma once

#include <cstdint>
#include <functional>

namespace hjlab {

/// Worker count for data-parallel sweeps: hardware concurrency capped by the
/// HJLAB_THREADS environment variable (1 disables threading).
int worker_count();

/// Runs fn(begin, end) over disjoint chunks of [0, n), possibly on several
/// threads. Callers must only write to disjoint locations; results are then
/// independent of the worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace hjlab
