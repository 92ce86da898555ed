#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/table.hpp"

namespace ng {

// Number of workers actually used for a requested degree (0 = auto).
unsigned effective_jobs(unsigned requested);

// Evaluates row_fn(n) for n in [lo, hi] across a worker pool.  The range is
// split into contiguous chunks, one per worker; each worker builds its own
// row function through make_row_fn (cloning any operators it captures, so no
// state is shared), and results land in index order.  Output is therefore
// independent of the parallelism degree.  The first worker exception is
// rethrown after the pool joins.
using RowFn = std::function<std::vector<Cell>(std::uint64_t n)>;
std::vector<std::vector<Cell>> parallel_rows(std::uint64_t lo, std::uint64_t hi, unsigned jobs,
                                             const std::function<RowFn()>& make_row_fn);

}  // namespace ng
