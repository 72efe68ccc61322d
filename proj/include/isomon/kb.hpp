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

#ifndef ISOMON_KB_HPP
#define ISOMON_KB_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "isomon/limits.hpp"
#include "isomon/presentation.hpp"
#include "isomon/rewrite.hpp"
#include "isomon/words.hpp"

namespace isomon {

/// Length first, then lexicographic by declared letter precedence.
struct ShortlexOrder {
  std::array<int, 256> rank{};  // 0 = letter unused
  std::vector<Letter> precedence;

  bool less(const Word& a, const Word& b) const;
  std::string describe(const Alphabet& alphabet) const;  // "x1<x2<...<h"
};

/// x_1 < x_2 < ... < x_n < h; custom alphabets order by declaration.
ShortlexOrder default_precedence(const Alphabet& alphabet);
/// Parses "x1<x3<h" over the given alphabet.
ShortlexOrder parse_precedence(const Alphabet& alphabet, const std::string& text);

/// A terminating confluent system: every rule is strictly decreasing in the
/// order and all critical pairs join.
struct CompletedSystem {
  Alphabet alphabet;
  ShortlexOrder order;
  std::vector<RewriteRule> rules;  // oriented lhs -> rhs
};

struct KbResult {
  bool completed = false;
  std::optional<CompletedSystem> system;
  std::size_t pairs_processed = 0;
};

/// Knuth-Bendix completion of the presentation under the order. Runs until
/// closure or until limits.max_states critical pairs have been processed;
/// abandonment is reported, never treated as a refutation.
KbResult kb_complete(const Presentation& p, const ShortlexOrder& order,
                     const SearchLimits& limits);
KbResult kb_complete(const Presentation& p, const SearchLimits& limits);

/// Normal form of w under the completed system (leftmost, lowest rule).
Word kb_normal_form(const CompletedSystem& s, Word w);

/// Re-verifies termination orientation and joinability of all critical pairs.
bool kb_verify(const CompletedSystem& s);

struct IrreducibleCount {
  bool finite = false;
  unsigned long long count = 0;
};

/// Counts words over the system's alphabet containing no rule lhs as a
/// factor, via the factor-avoidance automaton; reports "infinite" iff the
/// automaton's live part has a reachable cycle.
IrreducibleCount count_irreducible(const CompletedSystem& s);

}  // namespace isomon

#endif  // ISOMON_KB_HPP
