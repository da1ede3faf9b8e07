#pragma once

#include <cstddef>
#include <functional>

namespace oval {

/// Worker count for internal parallel loops. Controlled by the OVAL_THREADS
/// environment variable (0 or unset = hardware concurrency).
std::size_t worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads with a static
/// contiguous partition. Callers keep determinism by writing per-index
/// results and reducing in index order afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace oval
