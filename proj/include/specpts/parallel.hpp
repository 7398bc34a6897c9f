#pragma once

#include <functional>

namespace specpts {

/// Worker count: SPECPTS_THREADS when set (>= 1), else hardware concurrency.
int thread_budget();

/// Runs fn(i) for i in [begin, end) on a static block partition. Each index
/// owns its output slot, so results are deterministic regardless of the
/// thread count.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace specpts
