#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace starrad {

/// Worker count: STARRAD_THREADS when set to a positive integer, otherwise
/// the hardware concurrency capped at 8.
inline unsigned thread_count() {
  if (const char* env = std::getenv("STARRAD_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
}

/// Runs fn(begin, end) over contiguous chunks of [0, n). Chunks are fixed by
/// n and the worker count alone.
template <typename Fn>
void parallel_chunks(int n, Fn&& fn) {
  const int workers = std::min<int>(static_cast<int>(thread_count()), std::max(n, 1));
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int begin = n * w / workers;
    const int end = n * (w + 1) / workers;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace starrad
