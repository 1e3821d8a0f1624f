// SPDX-License-Identifier: Apache-2.0
#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace bracketframe::detail {

unsigned thread_count() {
  if (const char* env = std::getenv("BRACKETFRAME_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body,
                  std::int64_t min_chunk) {
  if (count <= 0) return;
  const std::int64_t by_size = std::max<std::int64_t>(1, count / std::max<std::int64_t>(1, min_chunk));
  const std::int64_t workers = std::min<std::int64_t>(thread_count(), by_size);
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t lo = count * w / workers;
    const std::int64_t hi = count * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      try {
        for (std::int64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace bracketframe::detail
