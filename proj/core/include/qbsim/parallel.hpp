// parallel.hpp — Deterministic parallel-for over an index range

#pragma once

#include <cstddef>
#include <functional>

namespace qb {

// Worker count: QB_WORKERS env var if set (>=1), else hardware concurrency.
std::size_t worker_count();

// Runs fn(i) for i in [0, n) on up to `workers` threads (0 = worker_count()).
// Indices are statically chunked, so results written per-index are
// independent of scheduling. The first thrown exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t workers = 0);

} // namespace qb
