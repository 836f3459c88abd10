#pragma once

#include <cstddef>
#include <functional>

namespace awgcn {

// Runs fn(i) for i in [0, n) on up to `workers` threads with static index
// striding. Each index must write only to its own output slot; reductions
// happen afterwards in index order, so results never depend on the worker
// count or on scheduling.
void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn);

int default_workers();

}  // namespace awgcn
