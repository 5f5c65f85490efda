#pragma once

#include <cstddef>
#include <functional>

namespace entherm {

// Number of worker threads: ENTHERM_THREADS if set, else hardware concurrency.
std::size_t worker_count();

// Runs fn(i) for i in [0, n), split into contiguous blocks across workers.
// Falls back to a plain loop when only one worker is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace entherm
