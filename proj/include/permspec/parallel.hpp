// Deterministic parallel execution of independent chunks: the chunk
// decomposition is fixed by the request alone, so results merged in chunk
// order are byte-identical for any worker count.

#pragma once

#include <cstddef>
#include <functional>

namespace permspec {

// Worker-count cap: the PERMSPEC_THREADS environment variable when set to a
// positive integer, otherwise the hardware concurrency (at least 1).
std::size_t thread_cap();

// Run f(0), ..., f(n_chunks - 1) on up to `threads` workers.  Each index is
// executed exactly once; f must only write to per-chunk state.  The first
// exception thrown by any chunk is rethrown after all workers finish.
void run_chunks(std::size_t n_chunks, std::size_t threads,
                const std::function<void(std::size_t)>& f);

}  // namespace permspec
