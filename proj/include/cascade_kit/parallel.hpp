#pragma once

#include <cstddef>
#include <functional>

namespace ck {

/// Worker count: CASCADE_KIT_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs fn(i) for i in [0, n); each index is visited exactly once.
/// Callers write results into per-index slots so aggregation stays deterministic.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace ck
