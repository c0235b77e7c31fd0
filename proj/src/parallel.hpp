#pragma once

// Deterministic index-parallel map: results are written by index, so the
// output never depends on scheduling. Thread count comes from ATSIM_THREADS
// (default: hardware concurrency).

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace atsim::detail {

inline int thread_count() {
  if (const char* env = std::getenv("ATSIM_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Fn>
void parallel_for(std::size_t count, const Fn& body) {
  const int threads = thread_count();
  if (threads <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace atsim::detail
