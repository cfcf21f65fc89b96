#pragma once

// Deterministic chunked parallelism. Work over [0, n) is cut into a fixed
// number of chunks whose boundaries do not depend on the thread count, so
// per-chunk partial results can be reduced in chunk order and every
// computed value is identical for any --threads setting.

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace bcls {

inline constexpr std::size_t kDefaultChunks = 64;

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Invokes fn(chunk_index, begin, end) once per chunk. Chunks are disjoint,
// cover [0, n), and are at most kDefaultChunks regardless of threads.
inline void parallel_chunks(
    std::size_t n, int threads,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t chunks = std::min(n, kDefaultChunks);
  const std::size_t base = n / chunks;
  const std::size_t extra = n % chunks;
  auto bounds = [&](std::size_t c) {
    const std::size_t begin = c * base + std::min(c, extra);
    const std::size_t len = base + (c < extra ? 1 : 0);
    return std::pair<std::size_t, std::size_t>(begin, begin + len);
  };

  const int workers = std::min<int>(resolve_threads(threads),
                                    static_cast<int>(chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      fn(c, b, e);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        auto [b, e] = bounds(c);
        fn(c, b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Chunked deterministic sum: partials are accumulated per chunk and then
// combined in ascending chunk order.
inline double parallel_sum(
    std::size_t n, int threads,
    const std::function<double(std::size_t, std::size_t)>& partial) {
  if (n == 0) return 0.0;
  const std::size_t chunks = std::min(n, kDefaultChunks);
  std::vector<double> acc(chunks, 0.0);
  parallel_chunks(n, threads, [&](std::size_t c, std::size_t b, std::size_t e) {
    acc[c] = partial(b, e);
  });
  double total = 0.0;
  for (double x : acc) total += x;
  return total;
}

}  // namespace bcls
