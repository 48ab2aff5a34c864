#pragma once

#include <cstddef>
#include <functional>

namespace holder {

// Worker count: HOLDER_CERT_THREADS if set (positive integer, ConfigError
// otherwise), else the hardware concurrency, at least 1.
unsigned worker_count();

// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
// index is visited exactly once; results must be written to per-index slots
// so the outcome does not depend on scheduling. The first exception thrown
// by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace holder
