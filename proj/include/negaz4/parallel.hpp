#pragma once

#include <cstddef>
#include <functional>

namespace negaz4 {

// Worker count from NEGAZ4_THREADS, else the hardware concurrency (>= 1).
unsigned worker_count();

// Splits [0, n) into contiguous chunks, one per worker, and runs
// body(begin, end, worker) on each. Exceptions from workers are rethrown.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace negaz4
