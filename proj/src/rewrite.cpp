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

#include "isomon/rewrite.hpp"

#include <algorithm>
#include <unordered_map>

#include "isomon/errors.hpp"

namespace isomon {

std::vector<RewriteRule> rules_of(const Presentation& p) {
  std::vector<RewriteRule> rules;
  rules.reserve(p.relations.size());
  for (const auto& rel : p.relations) {
    rules.push_back({rel.lhs, rel.rhs, rel.tag, false});
  }
  return rules;
}

std::optional<Word> apply_at(const Word& w, const RewriteRule& rule, std::size_t pos) {
  const Word& pat = rule.pattern();
  if (pos > w.size() || pos + pat.size() > w.size()) {
    return std::nullopt;
  }
  if (w.compare(pos, pat.size(), pat) != 0) {
    return std::nullopt;
  }
  Word out;
  out.reserve(w.size() - pat.size() + rule.replacement().size());
  out.append(w, 0, pos);
  out.append(rule.replacement());
  out.append(w, pos + pat.size(), Word::npos);
  return out;
}

Word replay(const Derivation& d, const std::vector<RewriteRule>& rules) {
  Word w = d.start;
  for (const auto& step : d.steps) {
    if (step.rule >= rules.size()) {
      throw Error("derivation step references rule " + std::to_string(step.rule) +
                  " outside the rule set");
    }
    RewriteRule r = rules[step.rule];
    r.reversed = step.reversed ? !r.reversed : r.reversed;
    auto next = apply_at(w, r, step.pos);
    if (!next) {
      throw Error("derivation step does not apply (rule " + rules[step.rule].origin +
                  " at position " + std::to_string(step.pos) + ")");
    }
    w = std::move(*next);
  }
  if (w != d.end) {
    throw Error("derivation replay does not reach its endpoint");
  }
  return w;
}

nlohmann::json derivation_to_json(const Derivation& d, const std::vector<RewriteRule>& rules,
                                  const Alphabet& alphabet) {
  nlohmann::json j;
  j["start"] = alphabet.format(d.start);
  j["end"] = alphabet.format(d.end);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : d.steps) {
    steps.push_back({{"pos", s.pos},
                     {"rule", rules[s.rule].origin},
                     {"dir", s.reversed ? "rev" : "fwd"}});
  }
  j["steps"] = std::move(steps);
  return j;
}

namespace {

struct SideEntry {
  Word word;
  std::int32_t parent;  // -1 at the root
  DeriveStep step;      // step applied to parent to reach this word
};

struct Side {
  std::vector<SideEntry> entries;
  std::unordered_map<Word, std::int32_t> index;
  std::vector<std::int32_t> frontier;

  void seed(const Word& w) {
    entries.push_back({w, -1, {}});
    index.emplace(w, 0);
    frontier.push_back(0);
  }
};

// Chain of steps from the root down to entry id.
std::vector<DeriveStep> chain(const Side& side, std::int32_t id) {
  std::vector<DeriveStep> steps;
  for (std::int32_t cur = id; side.entries[cur].parent >= 0;
       cur = side.entries[cur].parent) {
    steps.push_back(side.entries[cur].step);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Derivation stitch(const Word& a, const Word& b, const Side& fwd, std::int32_t fid,
                  const Side& bwd, std::int32_t bid) {
  Derivation d;
  d.start = a;
  d.end = b;
  d.steps = chain(fwd, fid);
  // The backward chain runs b -> meet; traversing it from the meet back to b
  // applies each step in reverse orientation, in reverse order.
  std::vector<DeriveStep> back = chain(bwd, bid);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    DeriveStep s = *it;
    s.reversed = !s.reversed;
    d.steps.push_back(s);
  }
  return d;
}

// Length first, then bytewise; under the global letter coding this is the
// default x_1 < ... < x_n < h shortlex order.
bool shortlex_below(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

// Strictly shortlex-decreasing rule applications, first match in (position,
// rule, orientation) order. Keeps search endpoints small; every step is a
// recorded relation application, so the combined trace still replays.
std::vector<DeriveStep> greedy_reduce(Word& w, const std::vector<RewriteRule>& rules) {
  std::vector<DeriveStep> steps;
  const std::size_t step_cap = 1024 + 16 * w.size() * w.size();
  bool progress = true;
  while (progress && steps.size() < step_cap) {
    progress = false;
    for (std::uint32_t pos = 0; pos < w.size() && !progress; ++pos) {
      for (std::uint32_t ri = 0; ri < rules.size() && !progress; ++ri) {
        for (int rev = 0; rev < 2 && !progress; ++rev) {
          RewriteRule r = rules[ri];
          r.reversed = rev != 0;
          auto next = apply_at(w, r, pos);
          if (next && shortlex_below(*next, w)) {
            steps.push_back({pos, ri, rev != 0});
            w = std::move(*next);
            progress = true;
          }
        }
      }
    }
  }
  return steps;
}

}  // namespace

DeriveResult derive(const Word& a, const Word& b, const std::vector<RewriteRule>& rules,
                    const SearchLimits& limits, const Assignment* soundness) {
  DeriveResult result;
  if (a == b) {
    result.status = SearchStatus::Found;
    result.derivation = Derivation{a, b, {}};
    return result;
  }
  const int max_len = limits.effective_word_length(std::max(a.size(), b.size()));

  // Shrink both endpoints first; the bidirectional search only has to bridge
  // the reduced pair.
  Word a_red = a;
  Word b_red = b;
  std::vector<DeriveStep> a_steps = greedy_reduce(a_red, rules);
  std::vector<DeriveStep> b_steps = greedy_reduce(b_red, rules);
  auto finish = [&](Derivation bridge) {
    Derivation d;
    d.start = a;
    d.end = b;
    d.steps = std::move(a_steps);
    d.steps.insert(d.steps.end(), bridge.steps.begin(), bridge.steps.end());
    for (auto it = b_steps.rbegin(); it != b_steps.rend(); ++it) {
      DeriveStep s = *it;
      s.reversed = !s.reversed;
      d.steps.push_back(s);
    }
    replay(d, rules);  // every handed-out derivation replays
    if (soundness != nullptr) {
      if (!(evaluate(d.start, *soundness) == evaluate(d.end, *soundness))) {
        throw Error("derivation endpoints evaluate to different transformations");
      }
    }
    result.status = SearchStatus::Found;
    result.derivation = std::move(d);
    return result;
  };
  if (a_red == b_red) {
    return finish(Derivation{a_red, b_red, {}});
  }

  Side fwd, bwd;
  fwd.seed(a_red);
  bwd.seed(b_red);
  result.states = 2;

  int depth = 0;
  bool starved = false;
  std::optional<std::pair<std::int32_t, std::int32_t>> meet;  // (fwd id, bwd id)

  auto expand = [&](Side& self, Side& other, bool self_is_fwd) {
    std::vector<std::int32_t> next;
    for (std::int32_t id : self.frontier) {
      if (meet) {
        return;
      }
      // The frontier word is copied because entries may reallocate as
      // neighbours are appended.
      const Word w = self.entries[id].word;
      for (std::uint32_t ri = 0; ri < rules.size(); ++ri) {
        for (int rev = 0; rev < 2; ++rev) {
          RewriteRule r = rules[ri];
          r.reversed = rev != 0;
          const Word& pat = r.pattern();
          if (w.size() < pat.size()) {
            continue;
          }
          int new_len = static_cast<int>(w.size() - pat.size() + r.replacement().size());
          if (new_len > max_len) {
            continue;
          }
          for (std::uint32_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
            if (!pat.empty() && w.compare(pos, pat.size(), pat) != 0) {
              continue;
            }
            Word nw;
            nw.reserve(new_len);
            nw.append(w, 0, pos);
            nw.append(r.replacement());
            nw.append(w, pos + pat.size(), Word::npos);
            if (self.index.count(nw)) {
              continue;
            }
            if (result.states >= limits.max_states) {
              starved = true;
              return;
            }
            std::int32_t nid = static_cast<std::int32_t>(self.entries.size());
            self.index.emplace(nw, nid);
            self.entries.push_back({nw, id, {pos, ri, rev != 0}});
            next.push_back(nid);
            ++result.states;
            auto hit = other.index.find(self.entries[nid].word);
            if (hit != other.index.end()) {
              meet = self_is_fwd ? std::make_pair(nid, hit->second)
                                 : std::make_pair(hit->second, nid);
              return;
            }
          }
        }
      }
    }
    self.frontier = std::move(next);
  };

  while (!meet && !starved && depth < limits.max_depth &&
         (!fwd.frontier.empty() || !bwd.frontier.empty())) {
    // Expand the smaller live frontier; ties go forward. Deterministic, and
    // the total level count still bounds the derivation length.
    bool take_fwd;
    if (fwd.frontier.empty()) {
      take_fwd = false;
    } else if (bwd.frontier.empty()) {
      take_fwd = true;
    } else {
      take_fwd = fwd.frontier.size() <= bwd.frontier.size();
    }
    if (take_fwd) {
      expand(fwd, bwd, true);
    } else {
      expand(bwd, fwd, false);
    }
    ++depth;
  }

  if (!meet) {
    bool exhausted = fwd.frontier.empty() && bwd.frontier.empty();
    result.status = (starved || !exhausted) ? SearchStatus::LimitExceeded
                                            : SearchStatus::NotFound;
    return result;
  }

  return finish(stitch(a_red, b_red, fwd, meet->first, bwd, meet->second));
}

NormalizeResult normalize_to_form(const Word& w, const FormsCatalog& catalog,
                                  const std::vector<RewriteRule>& rules,
                                  const SearchLimits& limits) {
  NormalizeResult out;
  PartialInjection value = evaluate(w, catalog.assignment());
  const Word& target = catalog.word_for(value);
  DeriveResult r = derive(w, target, rules, limits, &catalog.assignment());
  out.status = r.status;
  if (r.status == SearchStatus::Found) {
    out.form = target;
    out.derivation = std::move(r.derivation);
  }
  return out;
}

}  // namespace isomon
