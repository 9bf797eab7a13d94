#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schur6 {

// Process-wide worker count for parallel_for. 0 means "all cores".
void set_jobs(int jobs);
int effective_jobs();

// Runs fn(i) for i in [0, n). Each index is processed exactly once; callers
// get determinism by writing results into slot i of a pre-sized container.
// The first exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const int jobs = effective_jobs();
  if (n == 0) return;
  if (jobs <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const int k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  for (int t = 0; t < k; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        if (failed.load()) return;
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace schur6
