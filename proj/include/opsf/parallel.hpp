#pragma once

#include <cstddef>
#include <functional>

namespace opsf {

// Worker count: hardware concurrency, capped by the OPSF_THREADS environment
// variable when set (minimum 1).
int worker_count();

// Runs fn(i) for every i in [0, count) across workers. Callers write results
// into preallocated per-index slots, so output order never depends on
// scheduling. The first exception thrown by any fn is rethrown.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace opsf
