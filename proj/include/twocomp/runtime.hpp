#ifndef TWOCOMP_RUNTIME_HPP
#define TWOCOMP_RUNTIME_HPP

#include <functional>

namespace twocomp {

/// Worker-thread cap from TWOCOMP_THREADS (clamped to [1, hardware]), read once.
int worker_thread_cap();

/// Runs fn(i) for i in [0, count) on up to worker_thread_cap() threads.
/// Work is assigned by index, so writes to per-index slots are deterministic.
void parallel_for_indexed(int count, const std::function<void(int)>& fn);

} // namespace twocomp

#endif
