#pragma once

#include <cstddef>
#include <functional>

namespace chordarc {

/// Worker threads for pair scans and sweeps: CHORDARC_THREADS when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(w) for w in [0, workers) on separate threads and joins. With a
/// single worker the task runs inline.
void run_workers(std::size_t workers, const std::function<void(std::size_t)>& task);

}  // namespace chordarc
