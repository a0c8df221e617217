#pragma once

#include <cstddef>
#include <functional>

namespace relaxtime {

// Number of worker threads: hardware concurrency capped by RELAXTIME_THREADS.
unsigned thread_count();

// Runs body(i) for i in [0, n), spread over thread_count() threads. The first
// exception thrown by any call is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace relaxtime
