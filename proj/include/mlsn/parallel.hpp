#pragma once

#include <cstddef>
#include <functional>

namespace mlsn {

/// Worker count: MLSN_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least one).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. The first
/// exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mlsn
