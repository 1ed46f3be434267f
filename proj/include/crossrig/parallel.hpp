#pragma once

#include <cstddef>
#include <functional>

namespace crossrig {

/// Resolves a thread-count request: values > 0 pass through; 0 falls back to
/// the CROSSRIG_THREADS environment variable, then to hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(i) for i in [0, count) on up to `threads` workers using a static
/// block partition. Work items must write to disjoint state; the partition
/// does not depend on scheduling, so results are identical for any thread
/// count as long as that holds.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace crossrig
