#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rc {

// Number of worker threads used by the parallel kernels (series
// multiplication, theta enumeration). Defaults to 1. Results never depend
// on this value.
unsigned thread_count();
void set_thread_count(unsigned n);

// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
// Chunk boundaries depend only on n and the thread count; callers must make
// their output independent of both.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)> &body);

} // namespace rc
