#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace peelkit {

/// Worker count: PEELKIT_THREADS caps parallelism; 0/unset means hardware.
inline int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("PEELKIT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < hw) return cap;
  }
  return hw;
}

/// Chunked parallel map over [0, n). Each index is processed exactly once;
/// results must be written to disjoint slots so output is deterministic
/// regardless of thread count.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace peelkit
