#pragma once

#include <cstddef>
#include <functional>

namespace swl {

/// Worker count: hardware concurrency, capped by SUBWORD_LAB_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace swl
