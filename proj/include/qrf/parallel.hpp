// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_PARALLEL_HPP
#define QRF_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qrf {

// Runs body(0..count-1) across up to `jobs` threads (0 = hardware count).
// Results must be written to per-index slots so the outcome is independent
// of scheduling; the first exception is rethrown after all threads join.
inline void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  if (count <= 0) return;
  unsigned workers = jobs > 0 ? unsigned(jobs) : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > unsigned(count)) workers = unsigned(count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qrf

#endif  // QRF_PARALLEL_HPP
