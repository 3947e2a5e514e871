#pragma once

#include <cstddef>
#include <functional>

namespace hyperim {

/// Resolves a requested worker count: 0 means "all hardware threads".
unsigned resolve_jobs(unsigned requested) noexcept;

/// Calls body(i) for every i in [0, count) on up to `jobs` threads.
///
/// Work items are claimed dynamically, so body must not depend on which thread
/// runs it. The first exception thrown by any body is rethrown on the calling
/// thread after all workers have stopped.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace hyperim
