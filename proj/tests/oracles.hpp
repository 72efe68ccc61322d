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

// Test-only oracles: brute-force enumeration of the symmetric inverse monoid
// and direct re-implementations of the defining predicates. These stay
// independent of the library code paths they are used to check.

#ifndef ISOMON_TESTS_ORACLES_HPP
#define ISOMON_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "isomon/partial_injection.hpp"

namespace isomon::oracle {

/// Visits every partial injection of {1..n}: each domain point is skipped or
/// mapped to an unused image point.
inline void for_each_partial_injection(
    int n, const std::function<void(const PartialInjection&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> rec = [&](int point) {
    if (point > n) {
      visit(PartialInjection::make(n, pairs));
      return;
    }
    rec(point + 1);  // point not in the domain
    for (int img = 1; img <= n; ++img) {
      if (!used[img]) {
        used[img] = true;
        pairs.emplace_back(point, img);
        rec(point + 1);
        pairs.pop_back();
        used[img] = false;
      }
    }
  };
  rec(1);
}

inline bool is_isometry(const PartialInjection& a) {
  const auto& pr = a.pairs();
  for (std::size_t i = 0; i < pr.size(); ++i) {
    for (std::size_t j = 0; j < pr.size(); ++j) {
      if (std::abs(pr[i].second - pr[j].second) != std::abs(pr[i].first - pr[j].first)) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_order_preserving(const PartialInjection& a) {
  const auto& pr = a.pairs();
  for (std::size_t i = 0; i < pr.size(); ++i) {
    for (std::size_t j = 0; j < pr.size(); ++j) {
      if (pr[i].first <= pr[j].first && pr[i].second > pr[j].second) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_order_reversing(const PartialInjection& a) {
  const auto& pr = a.pairs();
  for (std::size_t i = 0; i < pr.size(); ++i) {
    for (std::size_t j = 0; j < pr.size(); ++j) {
      if (pr[i].first <= pr[j].first && pr[i].second < pr[j].second) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<PartialInjection> brute_set(
    int n, const std::function<bool(const PartialInjection&)>& keep) {
  std::vector<PartialInjection> out;
  for_each_partial_injection(n, [&](const PartialInjection& a) {
    if (keep(a)) {
      out.push_back(a);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<PartialInjection> brute_dp(int n) {
  return brute_set(n, [](const PartialInjection& a) { return is_isometry(a); });
}

inline std::vector<PartialInjection> brute_odp(int n) {
  return brute_set(n, [](const PartialInjection& a) {
    return is_isometry(a) && is_order_preserving(a);
  });
}

/// Seeded generator for the randomized property tests; override with the
/// ISOMON_TEST_SEED environment variable.
inline std::mt19937_64 test_rng() {
  unsigned long long seed = 20250811ull;
  if (const char* env = std::getenv("ISOMON_TEST_SEED")) {
    seed = std::strtoull(env, nullptr, 10);
  }
  return std::mt19937_64(seed);
}

/// A uniformly random partial injection (random domain bits, random injective
/// images).
inline PartialInjection random_partial_injection(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    images[i] = i + 1;
  }
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  std::size_t next = 0;
  for (int p = 1; p <= n; ++p) {
    if (rng() % 2 == 0) {
      pairs.emplace_back(p, images[next++]);
    }
  }
  return PartialInjection::make(n, std::move(pairs));
}

}  // namespace isomon::oracle

#endif  // ISOMON_TESTS_ORACLES_HPP
