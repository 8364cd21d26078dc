#pragma once

#include <cstddef>
#include <functional>

namespace plausival {

/// PLAUSIVAL_THREADS when set to a positive integer, else the hardware
/// concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` threads. Results must
/// be written to per-index slots; ordering of side effects is unspecified.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace plausival
