#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace graphscan {

inline unsigned default_worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Run fn(index) for every index in [0, count). Indices are claimed from a
/// shared counter, so scheduling varies, but callers that make fn(index) a
/// pure function of the index and aggregate results in index order get
/// results independent of worker count and ordering.
template <class Fn>
void parallel_for_index(std::uint64_t count, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = default_worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (std::thread& thread : pool) thread.join();
}

}  // namespace graphscan
