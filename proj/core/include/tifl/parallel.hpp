#pragma once

#include <cstddef>
#include <functional>

namespace tifl {

/// Worker count: hardware concurrency, capped by the TIFL_THREADS environment variable.
unsigned worker_count();

/// Runs body(i) for i in [0, count) over contiguous chunks on worker_count() threads.
/// Each index is visited exactly once; callers write results into slot i so the
/// output order never depends on scheduling. Nested calls from a worker run inline.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tifl
