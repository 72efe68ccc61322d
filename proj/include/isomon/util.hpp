/*
 * Copyright 2026 the isomon authors
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

#ifndef ISOMON_UTIL_HPP
#define ISOMON_UTIL_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace isomon {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exact binomial coefficient; 0 for k < 0 or k > n. Fits comfortably in
/// 64 bits for the ranges used here (n <= 64 or so).
inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

inline long long ipow2(int e) {
  return 1LL << e;
}

/// Runs body(i) for i in [0, count). With jobs > 1 the index space is split
/// into contiguous chunks, one thread per chunk; every body(i) must be
/// independent and write only to its own slot. Results are index-ordered, so
/// the outcome is identical for any job count.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) {
      break;
    }
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        body(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace isomon

#endif  // ISOMON_UTIL_HPP
