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

#ifndef ISOMON_PARTIAL_INJECTION_HPP
#define ISOMON_PARTIAL_INJECTION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isomon {

/// Flags computed by quantifying over all pairs of domain points. Elements of
/// rank <= 1 satisfy every universally quantified flag vacuously, so they are
/// simultaneously order-preserving, order-reversing and isometries.
struct Classification {
  bool order_preserving = true;
  bool order_reversing = true;
  bool isometry = true;
  bool extensive = true;
  bool coextensive = true;
  bool partial_identity = true;
  /// Present iff order_preserving && isometry && rank >= 1; then the map is
  /// i -> i + shift on its whole domain.
  std::optional<int> shift;
};

/// An injective partial self-map of {1..n}, stored in canonical form as the
/// domain-sorted list of (point, image) pairs. Values are immutable after
/// construction; composition acts left to right: i(ab) = (ia)b.
class PartialInjection {
 public:
  PartialInjection() = default;  // the empty map on n = 0

  /// Validates and canonicalizes. Throws OutOfRangeError for points outside
  /// 1..n and NotInjectiveError for a repeated domain or image point.
  static PartialInjection make(int n, std::vector<std::pair<int, int>> pairs);

  static PartialInjection identity(int n);
  static PartialInjection empty_map(int n);
  /// The rank-one map {i -> j}.
  static PartialInjection rank_one(int n, int i, int j);

  int ground_n() const { return n_; }
  int rank() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool defined_at(int i) const;
  std::optional<int> image_of(int i) const;

  /// Left-to-right composition: first *this, then b. Both operands must share
  /// the same ground set; anything else throws MismatchedGroundSetError.
  PartialInjection then(const PartialInjection& b) const;

  PartialInjection inverse() const;

  Classification classify() const;
  bool is_partial_identity() const;

  /// "n=9; 3->1 5->3 6->4", or "n=4; empty" for rank 0.
  std::string to_text() const;

  /// Equal keys iff equal transformations; usable as a set/map key.
  std::string canonical_key() const { return to_text(); }

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;
  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;  // sorted by domain point
};

inline PartialInjection compose(const PartialInjection& a, const PartialInjection& b) {
  return a.then(b);
}

}  // namespace isomon

template <>
struct std::hash<isomon::PartialInjection> {
  std::size_t operator()(const isomon::PartialInjection& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(p.ground_n()));
    for (const auto& [d, i] : p.pairs()) {
      mix(static_cast<std::size_t>(d) * 131 + static_cast<std::size_t>(i));
    }
    return h;
  }
};

#endif  // ISOMON_PARTIAL_INJECTION_HPP
