#pragma once

#include <functional>

namespace jacsyz {

// Thread cap from JACSYZ_THREADS (default 1 = fully sequential).
int max_threads();

// Run fn(0..n-1); with max_threads() > 1 the items run on worker threads.
// Callers must write results into per-index slots so the outcome is
// independent of scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace jacsyz
