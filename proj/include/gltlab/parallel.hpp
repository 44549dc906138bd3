#pragma once
//
// Project     : gltlab
// Module      : parallel
// Description : static-partition index parallelism for per-dimension work
//

#include <cstddef>
#include <functional>

namespace gltlab {

// Number of worker threads used by parallel_for. Defaults to the hardware
// concurrency; 0 or negative restores that default.
int  parallel_jobs();
void set_parallel_jobs(int jobs);

// Runs body(i) for i in [0, count). Work is split statically so that results
// written by index are deterministic regardless of scheduling. The first
// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace gltlab
