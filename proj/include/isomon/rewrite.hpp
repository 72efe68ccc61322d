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

#ifndef ISOMON_REWRITE_HPP
#define ISOMON_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "isomon/forms.hpp"
#include "isomon/limits.hpp"
#include "isomon/presentation.hpp"
#include "isomon/words.hpp"

namespace isomon {

/// An oriented relation instance. `reversed` selects which side is the
/// pattern: as-written replaces lhs by rhs, reversed replaces rhs by lhs.
/// Either side may be empty (h^2 = 1 has an empty rhs), so a reversed
/// application can insert letters.
struct RewriteRule {
  Word lhs;
  Word rhs;
  std::string origin;
  bool reversed = false;

  const Word& pattern() const { return reversed ? rhs : lhs; }
  const Word& replacement() const { return reversed ? lhs : rhs; }
};

/// The relations of a presentation, as written.
std::vector<RewriteRule> rules_of(const Presentation& p);

/// If the rule's pattern matches w at pos, the rewritten word; absent
/// otherwise.
std::optional<Word> apply_at(const Word& w, const RewriteRule& rule, std::size_t pos);

struct DeriveStep {
  std::uint32_t pos;
  std::uint32_t rule;  // index into the rule vector
  bool reversed;       // applied against the rule's stored orientation
};

/// A replayable trace inside the congruence: applying the steps to `start`
/// in order yields `end`.
struct Derivation {
  Word start;
  Word end;
  std::vector<DeriveStep> steps;
};

/// Replays the trace; throws Error if any step fails to apply.
Word replay(const Derivation& d, const std::vector<RewriteRule>& rules);

nlohmann::json derivation_to_json(const Derivation& d, const std::vector<RewriteRule>& rules,
                                  const Alphabet& alphabet);

enum class SearchStatus {
  Found,
  NotFound,      // bounded space exhausted; not a proof of non-consequence
  LimitExceeded  // state or depth budget ran out first
};

struct DeriveResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Derivation> derivation;
  std::size_t states = 0;
};

/// Bidirectional level-synchronized search over undirected rule application.
/// Deterministic: frontiers expand in insertion order, rules in index order,
/// positions ascending, as-written before reversed. Every returned
/// derivation is replayed before being handed out; when `soundness` is given
/// the two endpoints are also evaluated and compared.
DeriveResult derive(const Word& a, const Word& b, const std::vector<RewriteRule>& rules,
                    const SearchLimits& limits, const Assignment* soundness = nullptr);

struct NormalizeResult {
  SearchStatus status = SearchStatus::NotFound;
  Word form;
  std::optional<Derivation> derivation;
};

/// Rewrites w to the unique catalog word with the same evaluation. The target
/// is located semantically; the derivation witnesses the syntactic path.
NormalizeResult normalize_to_form(const Word& w, const FormsCatalog& catalog,
                                  const std::vector<RewriteRule>& rules,
                                  const SearchLimits& limits);

}  // namespace isomon

#endif  // ISOMON_REWRITE_HPP
