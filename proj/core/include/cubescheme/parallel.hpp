#pragma once

#include <cstddef>
#include <functional>

namespace cubescheme {

/// Worker count from CUBESCHEME_THREADS, else the hardware concurrency
/// (at least 1).
unsigned default_thread_count();

/// Calls fn(i) for every i in [0, count) on up to `threads` workers. The
/// first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, unsigned threads = 0);

}  // namespace cubescheme
