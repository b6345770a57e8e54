#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace blab {

// Worker count from BARGMANN_LAB_THREADS (default 1, clamped to [1, 256]).
int worker_count();

// Calls f(i) for i in [0, n). Each index is visited exactly once; callers
// write results into per-index slots, so output never depends on scheduling.
template <typename F>
void parallel_for(std::size_t n, F&& f, int workers = worker_count()) {
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&f, n, w, t] {
      const std::size_t lo = n * t / w;
      const std::size_t hi = n * (t + 1) / w;
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
}

}  // namespace blab
