#pragma once

#include <cstddef>
#include <functional>

namespace selfind::detail {

// Worker count: SELFIND_THREADS if set, else hardware concurrency.
unsigned thread_count();

// Runs fn(i) for i in [0, n) over contiguous chunks. Callers write results
// into per-index slots and reduce in index order, so output never depends on
// the number of threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace selfind::detail
