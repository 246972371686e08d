#pragma once

#include <cstddef>
#include <functional>

namespace conjp {

/// Thread cap from CONJP_THREADS (unset or invalid: hardware concurrency).
std::size_t thread_limit();

/// Runs body(i) for i in [0, n). Each index is handled by exactly one call,
/// so results written to slot i are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace conjp
