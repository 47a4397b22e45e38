#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace bxy {

/// Number of worker threads to use when the caller passes 0.
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 picks
/// default_thread_count()). Indices are claimed dynamically; callers write
/// results into slot i so the outcome does not depend on scheduling. If any
/// call throws, the exception of the lowest failing index is rethrown after
/// all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

} // namespace bxy
