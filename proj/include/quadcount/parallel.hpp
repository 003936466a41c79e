#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quadcount {

// Runs fn(worker, begin, end) over chunks of [0, count) on `workers`
// threads (inline when workers <= 1). Chunks are claimed dynamically, so
// callers must not depend on which worker sees which range. The first
// exception thrown by any task is rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned workers, std::size_t chunk, Fn&& fn) {
  if (count == 0) return;
  if (chunk == 0) chunk = 1;
  if (workers <= 1) {
    for (std::size_t begin = 0; begin < count; begin += chunk)
      fn(0u, begin, std::min(begin + chunk, count));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto body = [&](unsigned worker) {
    try {
      while (true) {
        std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
        if (begin >= count) break;
        fn(worker, begin, std::min(begin + chunk, count));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body, w);
  body(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

template <typename Fn>
void parallel_for_each(std::size_t count, unsigned workers, Fn&& fn) {
  std::size_t chunk = std::max<std::size_t>(1, count / (std::max(1u, workers) * 16));
  chunk = std::min<std::size_t>(chunk, 4096);
  parallel_chunks(count, workers, chunk, [&](unsigned worker, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) fn(worker, i);
  });
}

}  // namespace quadcount
