#pragma once

#include <cstddef>
#include <functional>

namespace levymax {

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = hardware).
// Each index is visited exactly once; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

unsigned default_threads();

}  // namespace levymax
