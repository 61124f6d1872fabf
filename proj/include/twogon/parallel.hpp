#pragma once

#include <cstddef>
#include <functional>

namespace twogon {

/// Worker count: hardware concurrency, capped by TWOGON_THREADS when set.
/// Never affects results, only scheduling.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace twogon
