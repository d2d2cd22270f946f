#pragma once

// Minimal fork-join helper. Each index writes its own slot, so results do not
// depend on scheduling.

#include <cstddef>
#include <functional>

namespace toric {

/// Worker threads for parallel loops. The initial value comes from the
/// TORIC_THREADS environment variable (default 1).
std::size_t thread_count();
/// 0 selects the hardware concurrency.
void set_thread_count(std::size_t n);

/// Runs body(i) for every i in [0, n). If any call throws, the exception of
/// the lowest failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace toric
