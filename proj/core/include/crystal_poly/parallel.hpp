#pragma once

#include <cstddef>
#include <functional>

namespace crystal_poly {

/// Worker count from CRYSTAL_POLY_THREADS (default 1, capped at hardware concurrency * 4).
int worker_count();

/// Splits [0, count) into contiguous chunks, one per worker. fn(begin, end, worker_id).
/// Runs inline when there is a single worker or the range is small.
void parallel_chunks(std::size_t count, const std::function<void(std::size_t, std::size_t, int)>& fn);

}  // namespace crystal_poly
