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

#include "isomon/partial_injection.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "isomon/errors.hpp"

namespace isomon {

PartialInjection PartialInjection::make(int n, std::vector<std::pair<int, int>> pairs) {
  if (n < 0) {
    throw OutOfRangeError("ground-set size must be non-negative, got " + std::to_string(n));
  }
  std::sort(pairs.begin(), pairs.end());
  std::set<int> images;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [d, i] = pairs[k];
    if (d < 1 || d > n) {
      throw OutOfRangeError("domain point " + std::to_string(d) + " outside 1.." + std::to_string(n));
    }
    if (i < 1 || i > n) {
      throw OutOfRangeError("image point " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    if (k > 0 && pairs[k - 1].first == d) {
      throw NotInjectiveError("domain point " + std::to_string(d) + " listed twice");
    }
    if (!images.insert(i).second) {
      throw NotInjectiveError("image point " + std::to_string(i) + " repeated");
    }
  }
  PartialInjection p;
  p.n_ = n;
  p.pairs_ = std::move(pairs);
  return p;
}

PartialInjection PartialInjection::identity(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n);
  for (int i = 1; i <= n; ++i) {
    pairs.emplace_back(i, i);
  }
  return make(n, std::move(pairs));
}

PartialInjection PartialInjection::empty_map(int n) {
  return make(n, {});
}

PartialInjection PartialInjection::rank_one(int n, int i, int j) {
  return make(n, {{i, j}});
}

bool PartialInjection::defined_at(int i) const {
  return image_of(i).has_value();
}

std::optional<int> PartialInjection::image_of(int i) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(i, 0));
  if (it != pairs_.end() && it->first == i) {
    return it->second;
  }
  return std::nullopt;
}

PartialInjection PartialInjection::then(const PartialInjection& b) const {
  if (n_ != b.n_) {
    throw MismatchedGroundSetError("cannot compose maps on ground sets of size " +
                                   std::to_string(n_) + " and " + std::to_string(b.n_));
  }
  PartialInjection r;
  r.n_ = n_;
  r.pairs_.reserve(std::min(pairs_.size(), b.pairs_.size()));
  for (const auto& [d, mid] : pairs_) {
    if (auto img = b.image_of(mid)) {
      r.pairs_.emplace_back(d, *img);
    }
  }
  return r;  // pairs_ stays domain-sorted
}

PartialInjection PartialInjection::inverse() const {
  std::vector<std::pair<int, int>> swapped;
  swapped.reserve(pairs_.size());
  for (const auto& [d, i] : pairs_) {
    swapped.emplace_back(i, d);
  }
  std::sort(swapped.begin(), swapped.end());
  PartialInjection r;
  r.n_ = n_;
  r.pairs_ = std::move(swapped);
  return r;
}

Classification PartialInjection::classify() const {
  Classification c;
  for (const auto& [d, i] : pairs_) {
    if (i != d) {
      c.partial_identity = false;
    }
    if (i < d) {
      c.extensive = false;
    }
    if (i > d) {
      c.coextensive = false;
    }
  }
  for (std::size_t a = 0; a < pairs_.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs_.size(); ++b) {
      auto [i, ia] = pairs_[a];
      auto [j, ja] = pairs_[b];  // i < j by canonical order
      if (ia >= ja) {
        c.order_preserving = false;
      }
      if (ia <= ja) {
        c.order_reversing = false;
      }
      if (std::abs(ia - ja) != j - i) {
        c.isometry = false;
      }
    }
  }
  if (c.order_preserving && c.isometry && !pairs_.empty()) {
    c.shift = pairs_.front().second - pairs_.front().first;
  }
  return c;
}

bool PartialInjection::is_partial_identity() const {
  for (const auto& [d, i] : pairs_) {
    if (d != i) {
      return false;
    }
  }
  return true;
}

std::string PartialInjection::to_text() const {
  std::string s = "n=" + std::to_string(n_) + ";";
  if (pairs_.empty()) {
    return s + " empty";
  }
  for (const auto& [d, i] : pairs_) {
    s += " " + std::to_string(d) + "->" + std::to_string(i);
  }
  return s;
}

}  // namespace isomon
