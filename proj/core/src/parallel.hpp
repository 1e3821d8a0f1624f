// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

namespace bracketframe::detail {

/// Worker count: BRACKETFRAME_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
unsigned thread_count();

/// Calls body(i) for i in [0, count). The range is split into fixed
/// contiguous chunks, one per worker, so results that are written by index
/// do not depend on the thread count. Exceptions from any chunk are
/// rethrown on the calling thread (the first one by chunk order).
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body,
                  std::int64_t min_chunk = 1);

}  // namespace bracketframe::detail
