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

#include "isomon/kb.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "isomon/errors.hpp"

namespace isomon {

bool ShortlexOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = rank[static_cast<unsigned char>(a[i])];
    int rb = rank[static_cast<unsigned char>(b[i])];
    if (ra != rb) {
      return ra < rb;
    }
  }
  return false;
}

std::string ShortlexOrder::describe(const Alphabet& alphabet) const {
  std::string s;
  for (std::size_t i = 0; i < precedence.size(); ++i) {
    if (i > 0) {
      s += '<';
    }
    s += alphabet.name(precedence[i]);
  }
  return s;
}

ShortlexOrder default_precedence(const Alphabet& alphabet) {
  std::vector<Letter> letters = alphabet.letters();
  std::sort(letters.begin(), letters.end(), [](Letter a, Letter b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  });
  ShortlexOrder o;
  o.precedence = letters;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    o.rank[static_cast<unsigned char>(letters[i])] = static_cast<int>(i) + 1;
  }
  return o;
}

ShortlexOrder parse_precedence(const Alphabet& alphabet, const std::string& text) {
  ShortlexOrder o;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find('<', start);
    std::string tok = text.substr(start, sep == std::string::npos ? sep : sep - start);
    if (!tok.empty()) {
      auto l = alphabet.find(tok);
      if (!l) {
        throw UnboundLetterError("precedence names unknown letter '" + tok + "'");
      }
      o.precedence.push_back(*l);
    }
    if (sep == std::string::npos) {
      break;
    }
    start = sep + 1;
  }
  if (o.precedence.size() != alphabet.letters().size()) {
    throw UsageError("precedence must list every alphabet letter exactly once");
  }
  for (std::size_t i = 0; i < o.precedence.size(); ++i) {
    o.rank[static_cast<unsigned char>(o.precedence[i])] = static_cast<int>(i) + 1;
  }
  return o;
}

namespace {

struct KbRule {
  Word lhs;
  Word rhs;
  bool active = true;
};

struct Completion {
  const ShortlexOrder& order;
  std::size_t pair_budget;
  std::vector<KbRule> rules;
  std::deque<std::pair<Word, Word>> equations;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t pairs_processed = 0;

  explicit Completion(const ShortlexOrder& o, std::size_t budget)
      : order(o), pair_budget(budget) {}

  Word normalize(Word w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (std::size_t ri = 0; ri < rules.size() && !changed; ++ri) {
          const KbRule& r = rules[ri];
          if (!r.active || pos + r.lhs.size() > w.size()) {
            continue;
          }
          if (w.compare(pos, r.lhs.size(), r.lhs) == 0) {
            Word next;
            next.reserve(w.size() - r.lhs.size() + r.rhs.size());
            next.append(w, 0, pos);
            next.append(r.rhs);
            next.append(w, pos + r.lhs.size(), Word::npos);
            w = std::move(next);
            changed = true;
          }
        }
      }
    }
    return w;
  }

  void add_equation(Word u, Word v) { equations.emplace_back(std::move(u), std::move(v)); }

  // Normalizes, orients, installs the rule, queues its critical pairs and
  // re-queues any older rule it now subsumes.
  void process_equation(Word u, Word v) {
    u = normalize(std::move(u));
    v = normalize(std::move(v));
    if (u == v) {
      return;
    }
    Word lhs, rhs;
    if (order.less(u, v)) {
      lhs = std::move(v);
      rhs = std::move(u);
    } else {
      lhs = std::move(u);
      rhs = std::move(v);
    }
    std::size_t id = rules.size();
    rules.push_back({std::move(lhs), std::move(rhs), true});
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (!rules[j].active) {
        continue;
      }
      pairs.emplace_back(id, j);
      if (j != id) {
        pairs.emplace_back(j, id);
      }
    }
    // Interreduction: older rules whose lhs now reduces get replayed as
    // equations; reducible right-hand sides are normalized in place.
    const Word& new_lhs = rules[id].lhs;
    for (std::size_t j = 0; j + 1 < rules.size(); ++j) {
      if (!rules[j].active) {
        continue;
      }
      if (rules[j].lhs.find(new_lhs) != Word::npos) {
        rules[j].active = false;
        add_equation(rules[j].lhs, rules[j].rhs);
      } else {
        Word reduced = normalize(rules[j].rhs);
        if (reduced != rules[j].rhs) {
          rules[j].rhs = std::move(reduced);
        }
      }
    }
  }

  // Superpositions of r1 against r2: proper overlaps (a suffix of lhs1 is a
  // prefix of lhs2) and containments (lhs2 inside lhs1).
  void superpose(std::size_t i1, std::size_t i2) {
    const Word l1 = rules[i1].lhs;
    const Word r1 = rules[i1].rhs;
    const Word l2 = rules[i2].lhs;
    const Word r2 = rules[i2].rhs;
    std::size_t max_t = std::min(l1.size(), l2.size()) - 1;
    for (std::size_t t = 1; t <= max_t; ++t) {
      if (l1.compare(l1.size() - t, t, l2, 0, t) != 0) {
        continue;
      }
      Word p = r1;
      p.append(l2, t, Word::npos);
      Word q = l1.substr(0, l1.size() - t);
      q.append(r2);
      add_equation(std::move(p), std::move(q));
    }
    if (l2.size() < l1.size() || (l2.size() == l1.size() && i1 != i2)) {
      for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
        if (l1.compare(pos, l2.size(), l2) != 0) {
          continue;
        }
        Word q = l1.substr(0, pos);
        q.append(r2);
        q.append(l1, pos + l2.size(), Word::npos);
        add_equation(r1, std::move(q));
      }
    }
  }

  bool run() {
    while (!equations.empty() || !pairs.empty()) {
      while (!equations.empty()) {
        auto [u, v] = std::move(equations.front());
        equations.pop_front();
        if (++pairs_processed > pair_budget) {
          return false;
        }
        process_equation(std::move(u), std::move(v));
      }
      if (pairs.empty()) {
        break;
      }
      auto [i, j] = pairs.front();
      pairs.pop_front();
      if (!rules[i].active || !rules[j].active) {
        continue;
      }
      if (++pairs_processed > pair_budget) {
        return false;
      }
      superpose(i, j);
    }
    return true;
  }
};

}  // namespace

KbResult kb_complete(const Presentation& p, const ShortlexOrder& order,
                     const SearchLimits& limits) {
  Completion c(order, limits.max_states);
  for (const auto& rel : p.relations) {
    c.add_equation(rel.lhs, rel.rhs);
  }
  KbResult result;
  result.completed = c.run();
  result.pairs_processed = c.pairs_processed;
  if (!result.completed) {
    return result;
  }
  CompletedSystem sys{p.alphabet, order, {}};
  for (std::size_t i = 0; i < c.rules.size(); ++i) {
    if (c.rules[i].active) {
      sys.rules.push_back(
          {c.rules[i].lhs, c.rules[i].rhs, "kb" + std::to_string(sys.rules.size()), false});
    }
  }
  // Sanity: the system must still prove every input relation.
  for (const auto& rel : p.relations) {
    if (kb_normal_form(sys, rel.lhs) != kb_normal_form(sys, rel.rhs)) {
      throw Error("completed system lost relation " + rel.tag);
    }
  }
  if (!kb_verify(sys)) {
    throw Error("completed system failed post-hoc verification");
  }
  result.system = std::move(sys);
  return result;
}

KbResult kb_complete(const Presentation& p, const SearchLimits& limits) {
  return kb_complete(p, default_precedence(p.alphabet), limits);
}

Word kb_normal_form(const CompletedSystem& s, Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
      for (const auto& r : s.rules) {
        if (pos + r.lhs.size() > w.size()) {
          continue;
        }
        if (w.compare(pos, r.lhs.size(), r.lhs) == 0) {
          Word next;
          next.reserve(w.size() - r.lhs.size() + r.rhs.size());
          next.append(w, 0, pos);
          next.append(r.rhs);
          next.append(w, pos + r.lhs.size(), Word::npos);
          w = std::move(next);
          changed = true;
          break;
        }
      }
    }
  }
  return w;
}

bool kb_verify(const CompletedSystem& s) {
  for (const auto& r : s.rules) {
    if (!s.order.less(r.rhs, r.lhs)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < s.rules.size(); ++i) {
    for (std::size_t j = 0; j < s.rules.size(); ++j) {
      const Word& l1 = s.rules[i].lhs;
      const Word& r1 = s.rules[i].rhs;
      const Word& l2 = s.rules[j].lhs;
      const Word& r2 = s.rules[j].rhs;
      std::size_t max_t = std::min(l1.size(), l2.size()) - 1;
      for (std::size_t t = 1; t <= max_t; ++t) {
        if (l1.compare(l1.size() - t, t, l2, 0, t) != 0) {
          continue;
        }
        Word p = r1;
        p.append(l2, t, Word::npos);
        Word q = l1.substr(0, l1.size() - t);
        q.append(r2);
        if (kb_normal_form(s, p) != kb_normal_form(s, q)) {
          return false;
        }
      }
      if (l2.size() < l1.size() || (l2.size() == l1.size() && i != j)) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (l1.compare(pos, l2.size(), l2) != 0) {
            continue;
          }
          Word q = l1.substr(0, pos);
          q.append(r2);
          q.append(l1, pos + l2.size(), Word::npos);
          if (kb_normal_form(s, r1) != kb_normal_form(s, q)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

IrreducibleCount count_irreducible(const CompletedSystem& s) {
  // Factor-avoidance automaton: states are the proper prefixes of the rule
  // left-hand sides; a transition that completes any lhs is dead.
  std::map<Word, int> state_of;
  std::vector<Word> states;
  auto intern = [&](const Word& w) {
    auto [it, fresh] = state_of.try_emplace(w, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(w);
    }
    return it->second;
  };
  intern(Word{});
  for (const auto& r : s.rules) {
    for (std::size_t len = 1; len < r.lhs.size(); ++len) {
      intern(r.lhs.substr(0, len));
    }
  }
  auto contains_lhs = [&](const Word& w) {
    for (const auto& r : s.rules) {
      if (w.find(r.lhs) != Word::npos) {
        return true;
      }
    }
    return false;
  };
  // For each state u and letter c: dead if uc contains an lhs, otherwise the
  // longest suffix of uc that is a state. Quadratic, fine at this scale.
  const auto& letters = s.alphabet.letters();
  std::vector<std::vector<int>> next(states.size(),
                                     std::vector<int>(letters.size(), -1));
  for (std::size_t si = 0; si < states.size(); ++si) {
    for (std::size_t ci = 0; ci < letters.size(); ++ci) {
      Word uc = states[si] + Word(1, letters[ci]);
      if (contains_lhs(uc)) {
        continue;  // dead
      }
      for (std::size_t drop = 0; drop <= uc.size(); ++drop) {
        Word suffix = uc.substr(drop);
        auto it = state_of.find(suffix);
        if (it != state_of.end()) {
          next[si][ci] = it->second;
          break;
        }
      }
    }
  }
  // Count walks from the root; a reachable cycle means infinitely many
  // irreducible words.
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(states.size(), Mark::White);
  std::vector<unsigned long long> walks(states.size(), 0);
  bool cyclic = false;
  constexpr unsigned long long kCap = 1ull << 62;
  std::function<void(int)> visit = [&](int v) {
    if (cyclic) {
      return;
    }
    mark[v] = Mark::Grey;
    unsigned long long total = 1;  // the empty walk ending here
    for (std::size_t ci = 0; ci < letters.size(); ++ci) {
      int t = next[v][ci];
      if (t < 0) {
        continue;
      }
      if (mark[t] == Mark::Grey) {
        cyclic = true;
        return;
      }
      if (mark[t] == Mark::White) {
        visit(t);
        if (cyclic) {
          return;
        }
      }
      total += walks[t];
      if (total > kCap) {
        throw Error("irreducible-word count overflows the counter");
      }
    }
    walks[v] = total;
    mark[v] = Mark::Black;
  };
  visit(0);
  IrreducibleCount out;
  out.finite = !cyclic;
  out.count = cyclic ? 0 : walks[0];
  return out;
}

}  // namespace isomon
