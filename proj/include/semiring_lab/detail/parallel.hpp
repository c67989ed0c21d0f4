/*
 *   Copyright 2026 The semiring-lab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace semiring_lab::detail {

/// Worker cap from SEMIRING_LAB_THREADS; 0, unset or garbage means auto.
inline int thread_limit() {
  int limit = 0;
  if (const char* env = std::getenv("SEMIRING_LAB_THREADS")) {
    try {
      limit = std::stoi(env);
    } catch (...) {
      limit = 0;
    }
  }
  if (limit <= 0) limit = static_cast<int>(std::thread::hardware_concurrency());
  return limit > 0 ? limit : 1;
}

/// Runs f(i) for i in [0, n). Contiguous chunks per worker, so callers that
/// write result slot i stay deterministic regardless of scheduling.
template <typename F>
void parallel_for(int n, F&& f) {
  int workers = thread_limit();
  if (workers > n) workers = n;
  if (workers <= 1 || n < 64) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_lock;
  int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int lo = w * chunk;
    int hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &f, &failure, &failure_lock] {
      try {
        for (int i = lo; i < hi; ++i) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

} // namespace semiring_lab::detail
