#pragma once

#include <functional>

namespace cyclerange {

/// Runs fn(i) for i in [0, count) on `threads` workers (0 = hardware
/// concurrency, 1 = serial).  Static chunking; callers store results by
/// index, so parallel and serial runs produce identical output.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace cyclerange
