#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace swivel {

/// Worker cap: SWIVEL_THREADS when set (>=1), else hardware concurrency.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("SWIVEL_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Run fn(chunk) for chunk = 0..n_chunks-1 on up to thread_cap() workers.
/// Chunk indices are handed out atomically; each chunk must write only to
/// its own slot so that merging stays deterministic regardless of the
/// worker count.
template <class Fn>
void parallel_for_chunks(std::size_t n_chunks, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(thread_cap(), n_chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= n_chunks) return;
        fn(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace swivel
