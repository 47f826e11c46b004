#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace macias {

// Runs fn(i) for i in [0, n), striping the index space across jobs threads.
// Each fn(i) must touch only its own output slot; results are then identical
// for every worker count.
template <typename Fn>
void parallel_for(long n, long jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  const long workers = std::min(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (long t = 0; t < workers; ++t) {
    pool.emplace_back([&fn, t, workers, n] {
      for (long i = t; i < n; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace macias
