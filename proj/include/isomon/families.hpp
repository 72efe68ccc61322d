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

#ifndef ISOMON_FAMILIES_HPP
#define ISOMON_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "isomon/partial_injection.hpp"
#include "isomon/report.hpp"
#include "isomon/words.hpp"

namespace isomon {

inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

/// x_i for i <= n-2 is the partial identity omitting n-i; x_{n-1} is the +1
/// shift on {1..n-1}; x_n is the -1 shift on {2..n}.
PartialInjection gen_x(int n, int i);

/// The reflection i -> n+1-i, the only non-identity permutation in DP_n.
PartialInjection gen_h(int n);

struct GeneratorFamily {
  FamilyKind kind;
  int n;
  std::vector<std::pair<std::string, PartialInjection>> elements;  // (label, map)
};

/// A = {x_1..x_n}; B = A + {h}; C = {h, x_n, x_1..x_floor((n-1)/2)}.
GeneratorFamily generating_set(FamilyKind kind, int n);

/// A deduplicated, canonically sorted element set closed under composition.
struct MonoidSet {
  int n = 0;
  std::string family;  // "odp", "dp" or "custom"
  std::vector<PartialInjection> elements;  // sorted, unique

  bool contains(const PartialInjection& p) const;
  std::size_t size() const { return elements.size(); }
  bool same_elements(const MonoidSet& other) const { return elements == other.elements; }
};

/// Frontier BFS over right-multiplication by the generators, seeded with the
/// identity. Throws LimitExceededError past the budget.
MonoidSet closure(const std::vector<PartialInjection>& gens,
                  std::size_t budget = kDefaultEnumerationBudget);
MonoidSet closure(const GeneratorFamily& family,
                  std::size_t budget = kDefaultEnumerationBudget);

/// Safety assertion: a,b in S implies ab in S (both orders are covered since
/// all pairs are checked).
bool is_composition_closed(const MonoidSet& s);

struct CardinalityRecord {
  long long odp = 0;        // 3*2^n - 2(n+1)
  long long dp = 0;         // 3*2^(n+1) - (n+2)^2 - 1
  long long odp_plus = 0;   // 2^(n+1) - (n+1)
  long long odp_minus = 0;  // same as odp_plus
  long long idempotents = 0;  // 2^n
  long long rank_le_one = 0;  // n^2 + 1
};

CardinalityRecord cardinality_formulas(int n);

struct DomainCensus {
  int coextensive = 0;
  int extensive = 0;
  int total = 0;
  std::vector<PartialInjection> elements;  // by shift, ascending
};

/// All ODP_n elements with domain exactly X, enumerated by legal shift.
DomainCensus domain_census(int n, std::vector<int> domain);

/// Checks DP_n = ODP_n u h.ODP_n with intersection exactly the rank <= 1
/// elements, plus the ODP+/ODP-/idempotent decomposition and counts.
VerificationReport verify_decomposition(int n,
                                        std::size_t budget = kDefaultEnumerationBudget);

/// closure(gens) == target, and every one-removed subset generates a proper
/// subset.
VerificationReport minimal_generating_check(const GeneratorFamily& gens,
                                            const MonoidSet& target,
                                            std::size_t budget = kDefaultEnumerationBudget);

}  // namespace isomon

#endif  // ISOMON_FAMILIES_HPP
