#pragma once

#include <cstddef>
#include <functional>

namespace ribbonrec {

// Worker count from RIBBONREC_THREADS, defaulting to 1.
int thread_count();
// Runs body(i) for i in [0, count) on thread_count() workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ribbonrec
