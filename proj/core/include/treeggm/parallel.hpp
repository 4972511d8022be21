#ifndef TREEGGM_PARALLEL_HPP
#define TREEGGM_PARALLEL_HPP

#include <functional>

namespace treeggm {

/// Runs fn(i) for i in [begin, end) on up to `threads` worker threads
/// (0 = hardware concurrency). Work is split into contiguous chunks; the
/// callable must write only to per-index slots so results are identical for
/// any thread count. Exceptions from workers are rethrown on the caller.
void parallel_for(int begin, int end, const std::function<void(int)>& fn, int threads = 0);

}  // namespace treeggm

#endif
