#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace liyorke {

// Static block partition; callers write results into per-index slots, so the
// outcome never depends on the worker count.
template <class Body>
void parallel_for(std::int64_t n, int threads, const Body& body) {
  if (threads <= 1 || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (threads > n) threads = int(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::int64_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::int64_t lo = t * chunk;
    std::int64_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::int64_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace liyorke
