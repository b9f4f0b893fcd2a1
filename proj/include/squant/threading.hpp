#pragma once

#include <cstdint>
#include <functional>

namespace squant {

/// Worker count for parallel evaluation: hardware concurrency, capped by the
/// SPECTRUM_QUANT_THREADS environment variable when set.
int worker_count();

/// Run fn(i) for i in [0, n), fanned out over worker threads in contiguous
/// chunks. Results must be written to preallocated per-index slots so the
/// caller can reduce in canonical order regardless of scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace squant
