#pragma once

#include <cstddef>
#include <functional>

namespace circfr {

// Worker cap from CIRC_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Callers write results into index-addressed
// slots and reduce in index order afterwards, so outcomes are independent of
// the schedule. Exceptions are captured and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace circfr
