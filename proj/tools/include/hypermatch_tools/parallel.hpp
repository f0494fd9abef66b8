#pragma once

#include <cstddef>
#include <functional>

namespace hypermatch::tools {

/// Worker count: HYPERMATCH_THREADS when set to a positive integer, capped by
/// the hardware concurrency; otherwise the hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls fn(i) for i in [0, count) on up to `threads` workers. Results must be
/// written by index so aggregation stays deterministic.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace hypermatch::tools
