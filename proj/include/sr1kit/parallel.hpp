#pragma once

#include <cstddef>
#include <functional>

namespace sr1kit {

// SR1KIT_JOBS when set, otherwise hardware concurrency; at least 1.
int default_jobs();

// Runs fn(i) for i in [0, n) on up to `jobs` threads (work-stealing over an
// atomic index). Callers own any synchronization of shared state; exceptions
// from workers are rethrown on the calling thread.
void parallel_for_index(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace sr1kit
