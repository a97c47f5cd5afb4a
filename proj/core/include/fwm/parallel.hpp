#pragma once

#include <cstddef>
#include <functional>

namespace fwm {

// Worker count: hardware concurrency, capped by FWM_THREADS when set.
unsigned thread_budget();

// Runs body(i) for i in [0, n) over contiguous chunks; rethrows the first failure.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fwm
