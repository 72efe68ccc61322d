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

#include "isomon/families.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "isomon/errors.hpp"
#include "isomon/util.hpp"

namespace isomon {

PartialInjection gen_x(int n, int i) {
  if (n < 3) {
    throw UnsupportedNError("generators need n >= 3, got " + std::to_string(n));
  }
  if (i < 1 || i > n) {
    throw IndexOutOfRangeError("generator index " + std::to_string(i) + " outside 1.." +
                               std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  if (i <= n - 2) {
    for (int p = 1; p <= n; ++p) {
      if (p != n - i) {
        pairs.emplace_back(p, p);
      }
    }
  } else if (i == n - 1) {
    for (int p = 1; p <= n - 1; ++p) {
      pairs.emplace_back(p, p + 1);
    }
  } else {  // i == n
    for (int p = 2; p <= n; ++p) {
      pairs.emplace_back(p, p - 1);
    }
  }
  return PartialInjection::make(n, std::move(pairs));
}

PartialInjection gen_h(int n) {
  if (n < 3) {
    throw UnsupportedNError("generators need n >= 3, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int p = 1; p <= n; ++p) {
    pairs.emplace_back(p, n + 1 - p);
  }
  return PartialInjection::make(n, std::move(pairs));
}

GeneratorFamily generating_set(FamilyKind kind, int n) {
  GeneratorFamily f{kind, n, {}};
  auto x_label = [](int i) { return "x" + std::to_string(i); };
  switch (kind) {
    case FamilyKind::A:
      for (int i = 1; i <= n; ++i) {
        f.elements.emplace_back(x_label(i), gen_x(n, i));
      }
      break;
    case FamilyKind::B:
      for (int i = 1; i <= n; ++i) {
        f.elements.emplace_back(x_label(i), gen_x(n, i));
      }
      f.elements.emplace_back("h", gen_h(n));
      break;
    case FamilyKind::C:
      f.elements.emplace_back("h", gen_h(n));
      f.elements.emplace_back(x_label(n), gen_x(n, n));
      for (int i = 1; i <= (n - 1) / 2; ++i) {
        f.elements.emplace_back(x_label(i), gen_x(n, i));
      }
      break;
  }
  return f;
}

bool MonoidSet::contains(const PartialInjection& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

MonoidSet closure(const std::vector<PartialInjection>& gens, std::size_t budget) {
  if (gens.empty()) {
    throw UsageError("closure needs at least one generator");
  }
  int n = gens.front().ground_n();
  for (const auto& g : gens) {
    if (g.ground_n() != n) {
      throw MismatchedGroundSetError("generators live on different ground sets");
    }
  }
  std::unordered_set<PartialInjection> seen;
  std::deque<PartialInjection> frontier;
  auto push = [&](const PartialInjection& p) {
    if (seen.insert(p).second) {
      if (seen.size() > budget) {
        throw LimitExceededError("closure enumeration exceeded budget of " +
                                 std::to_string(budget) + " elements");
      }
      frontier.push_back(p);
    }
  };
  push(PartialInjection::identity(n));
  for (const auto& g : gens) {
    push(g);
  }
  while (!frontier.empty()) {
    PartialInjection w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      push(w.then(g));
    }
  }
  MonoidSet s;
  s.n = n;
  s.family = "custom";
  s.elements.assign(seen.begin(), seen.end());
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

MonoidSet closure(const GeneratorFamily& family, std::size_t budget) {
  std::vector<PartialInjection> gens;
  gens.reserve(family.elements.size());
  for (const auto& [label, g] : family.elements) {
    (void)label;
    gens.push_back(g);
  }
  MonoidSet s = closure(gens, budget);
  s.family = family.kind == FamilyKind::A ? "odp" : "dp";
  return s;
}

bool is_composition_closed(const MonoidSet& s) {
  for (const auto& a : s.elements) {
    for (const auto& b : s.elements) {
      if (!s.contains(a.then(b))) {
        return false;
      }
    }
  }
  return true;
}

CardinalityRecord cardinality_formulas(int n) {
  if (n < 3) {
    throw UnsupportedNError("cardinality formulas need n >= 3, got " + std::to_string(n));
  }
  CardinalityRecord r;
  r.odp = 3 * ipow2(n) - 2 * (n + 1);
  r.dp = 3 * ipow2(n + 1) - static_cast<long long>(n + 2) * (n + 2) - 1;
  r.odp_plus = ipow2(n + 1) - (n + 1);
  r.odp_minus = r.odp_plus;
  r.idempotents = ipow2(n);
  r.rank_le_one = static_cast<long long>(n) * n + 1;
  return r;
}

DomainCensus domain_census(int n, std::vector<int> domain) {
  if (domain.empty()) {
    throw EmptyDomainSetError("domain census needs a nonempty domain set");
  }
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  if (domain.front() < 1 || domain.back() > n) {
    throw OutOfRangeError("domain set escapes 1.." + std::to_string(n));
  }
  DomainCensus census;
  int lo = 1 - domain.front();        // most negative legal shift
  int hi = n - domain.back();         // most positive legal shift
  for (int shift = lo; shift <= hi; ++shift) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(domain.size());
    for (int p : domain) {
      pairs.emplace_back(p, p + shift);
    }
    census.elements.push_back(PartialInjection::make(n, std::move(pairs)));
    if (shift <= 0) {
      ++census.coextensive;
    }
    if (shift >= 0) {
      ++census.extensive;
    }
  }
  census.total = static_cast<int>(census.elements.size());
  return census;
}

VerificationReport verify_decomposition(int n, std::size_t budget) {
  VerificationReport report(n, "decomposition");
  Stopwatch sw;
  auto formulas = cardinality_formulas(n);

  MonoidSet odp = closure(generating_set(FamilyKind::A, n), budget);
  MonoidSet dp = closure(generating_set(FamilyKind::B, n), budget);

  report.add("odp.size", static_cast<long long>(odp.size()) == formulas.odp,
             std::to_string(odp.size()) + " vs formula " + std::to_string(formulas.odp));
  report.add("dp.size", static_cast<long long>(dp.size()) == formulas.dp,
             std::to_string(dp.size()) + " vs formula " + std::to_string(formulas.dp));

  const PartialInjection h = gen_h(n);
  std::set<PartialInjection> h_odp;
  for (const auto& a : odp.elements) {
    h_odp.insert(h.then(a));
  }
  std::set<PartialInjection> uni(odp.elements.begin(), odp.elements.end());
  uni.insert(h_odp.begin(), h_odp.end());
  report.add("dp.eq.odp_union_h_odp",
             std::vector<PartialInjection>(uni.begin(), uni.end()) == dp.elements);

  std::vector<PartialInjection> inter;
  for (const auto& a : odp.elements) {
    if (h_odp.count(a)) {
      inter.push_back(a);
    }
  }
  report.add("intersection.size",
             static_cast<long long>(inter.size()) == formulas.rank_le_one,
             std::to_string(inter.size()) + " vs n^2+1 = " +
                 std::to_string(formulas.rank_le_one));
  bool inter_is_rank_le_one = true;
  for (const auto& a : inter) {
    if (a.rank() > 1) {
      inter_is_rank_le_one = false;
    }
  }
  std::size_t rank_le_one_in_dp = 0;
  for (const auto& a : dp.elements) {
    if (a.rank() <= 1) {
      ++rank_le_one_in_dp;
    }
  }
  report.add("intersection.rank_le_one",
             inter_is_rank_le_one && rank_le_one_in_dp == inter.size());

  std::vector<PartialInjection> plus, minus, idem;
  for (const auto& a : odp.elements) {
    auto c = a.classify();
    if (c.extensive) {
      plus.push_back(a);
    }
    if (c.coextensive) {
      minus.push_back(a);
    }
    if (c.extensive && c.coextensive) {
      idem.push_back(a);
    }
  }
  report.add("odp_plus.size", static_cast<long long>(plus.size()) == formulas.odp_plus,
             std::to_string(plus.size()));
  report.add("odp_minus.size", static_cast<long long>(minus.size()) == formulas.odp_minus,
             std::to_string(minus.size()));
  report.add("idempotents.size",
             static_cast<long long>(idem.size()) == formulas.idempotents,
             std::to_string(idem.size()));
  report.add("odp.eq.plus_union_minus",
             plus.size() + minus.size() - idem.size() == odp.size());
  bool idem_are_partial_identities = true;
  for (const auto& a : idem) {
    if (!a.is_partial_identity()) {
      idem_are_partial_identities = false;
    }
  }
  report.add("plus_cap_minus.eq.partial_identities", idem_are_partial_identities);

  if (!report.checks.empty()) {
    report.checks.front().timing_ms = sw.elapsed_ms();
  }
  return report;
}

VerificationReport minimal_generating_check(const GeneratorFamily& gens,
                                            const MonoidSet& target, std::size_t budget) {
  VerificationReport report(gens.n, "minimal_generating");
  MonoidSet full = closure(gens, budget);
  report.add("closure.eq.target", full.same_elements(target),
             std::to_string(full.size()) + " vs " + std::to_string(target.size()));
  for (std::size_t skip = 0; skip < gens.elements.size(); ++skip) {
    std::vector<PartialInjection> rest;
    for (std::size_t i = 0; i < gens.elements.size(); ++i) {
      if (i != skip) {
        rest.push_back(gens.elements[i].second);
      }
    }
    bool proper;
    if (rest.empty()) {
      proper = target.size() > 1;
    } else {
      MonoidSet sub = closure(rest, budget);
      proper = sub.size() < target.size();
    }
    report.add("without." + gens.elements[skip].first + ".proper", proper);
  }
  return report;
}

}  // namespace isomon
