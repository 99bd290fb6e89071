#pragma once

#include <cstddef>
#include <functional>

namespace ccq {

/// Worker count: CCQ_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. If any call
/// throws, the exception of the smallest failing index is rethrown after all
/// workers finish, so failures are reproducible regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ccq
