#pragma once

#include <cstddef>
#include <functional>

namespace settlegen {

/// Worker count from SETTLEGEN_THREADS, else the hardware concurrency (at least 1).
int thread_count();

/// Runs fn(i) for i in [0, n) across up to thread_count() threads. Callers
/// write results by index so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace settlegen
