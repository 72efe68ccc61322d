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

#include "isomon/forms.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "isomon/errors.hpp"
#include "isomon/families.hpp"
#include "isomon/util.hpp"

namespace isomon {

namespace {

// Visits every strictly increasing sequence of `size` indices within
// [lo, hi], in lexicographic order. size = 0 visits the empty sequence once.
void for_each_increasing(int lo, int hi, int size,
                         const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> seq;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(seq.size()) == size) {
      visit(seq);
      return;
    }
    int remaining = size - static_cast<int>(seq.size());
    for (int v = next; v + remaining - 1 <= hi; ++v) {
      seq.push_back(v);
      rec(v + 1);
      seq.pop_back();
    }
  };
  if (size < 0) {
    return;
  }
  rec(lo);
}

Word prefix_word(const std::vector<int>& ls) {
  Word w;
  for (int l : ls) {
    w.push_back(letter_x(l));
  }
  return w;
}

}  // namespace

FormsCatalog::FormsCatalog(int n) : n_(n), assignment_(standard_assignment(FamilyKind::A, n)) {}

void FormsCatalog::insert(Word w, const std::string& subset) {
  PartialInjection value = evaluate(w, assignment_);
  FormEntry e{std::move(w), value.rank(), subset, std::move(value)};
  auto [it, fresh_word] = by_word_.try_emplace(e.word, entries_.size());
  (void)it;
  if (!fresh_word) {
    throw Error("duplicate form word '" + Alphabet::family(FamilyKind::A, n_).format(e.word) +
                "' in subset " + subset);
  }
  auto [vit, fresh_value] = by_value_.try_emplace(e.value, entries_.size());
  (void)vit;
  if (!fresh_value) {
    throw Error("two form words evaluate to " + e.value.to_text());
  }
  entries_.push_back(std::move(e));
}

FormsCatalog FormsCatalog::build(int n) {
  if (n < 3) {
    throw UnsupportedNError("forms need n >= 3, got " + std::to_string(n));
  }
  FormsCatalog cat(n);
  const Letter xn = letter_x(n);
  const Letter xn1 = letter_x(n - 1);

  cat.insert(Word{}, "1");  // the identity

  // W_{n-1}: the generators plus the two mixed products.
  std::string top = "W" + std::to_string(n - 1);
  for (int i = 1; i <= n; ++i) {
    cat.insert(word_of({letter_x(i)}), top);
  }
  cat.insert(word_of({xn1, xn}), top);
  cat.insert(word_of({xn, xn1}), top);

  // W_{n-k,1} .. W_{n-k,7} for 2 <= k <= n-1.
  for (int k = 2; k <= n - 1; ++k) {
    std::string stratum = "W" + std::to_string(n - k) + ",";
    auto sub = [&stratum](int r) { return stratum + std::to_string(r); };

    for_each_increasing(1, n - 2, k - 1, [&](const std::vector<int>& ls) {
      Word base = prefix_word(ls);
      for (int i = ls.back() + 1; i <= n; ++i) {
        Word w = base;
        w.push_back(letter_x(i));
        cat.insert(std::move(w), sub(1));
      }
    });

    for_each_increasing(1, n - 2, k - 1, [&](const std::vector<int>& ls) {
      Word base = prefix_word(ls);
      cat.insert(base + word_of({xn1, xn}), sub(2));
      cat.insert(base + word_of({xn, xn1}), sub(2));
    });

    for_each_increasing(1, n - 2, k - 2, [&](const std::vector<int>& ls) {
      cat.insert(prefix_word(ls) + word_of({xn1, letter_x(n - 2), xn}), sub(3));
    });

    for (int i = 2; i <= k; ++i) {
      for_each_increasing(i, n - 2, k - i, [&](const std::vector<int>& ls) {
        cat.insert(prefix_word(ls) + word_pow(word_of({xn1}), i), sub(4));
      });
    }

    for (int i = 2; i <= k; ++i) {
      for_each_increasing(1, n - i - 1, k - i, [&](const std::vector<int>& ls) {
        cat.insert(prefix_word(ls) + word_pow(word_of({xn}), i), sub(5));
      });
    }

    for (int i = 2; i <= k; ++i) {
      for_each_increasing(i - 1, n - 2, k - i, [&](const std::vector<int>& ls) {
        cat.insert(prefix_word(ls) + word_pow(word_of({xn1}), i - 1) +
                       word_of({letter_x(n - i)}),
                   sub(6));
      });
    }

    for (int i = 2; i <= k; ++i) {
      for_each_increasing(1, n - i, k - i, [&](const std::vector<int>& ls) {
        cat.insert(prefix_word(ls) + word_of({xn, letter_x(1)}) +
                       word_pow(word_of({xn}), i - 2),
                   sub(7));
      });
    }
  }

  cat.insert(word_pow(word_of({xn}), n), "W0");

  for (int k = 0; k <= n; ++k) {
    long long want = size_formula(n, k);
    long long have = static_cast<long long>(cat.stratum(k).size());
    if (want != have) {
      throw Error("stratum " + std::to_string(k) + " has " + std::to_string(have) +
                  " words, expected " + std::to_string(want));
    }
  }
  return cat;
}

long long FormsCatalog::size_formula(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  if (k == 0 || k == n) {
    return 1;
  }
  return binomial(n, k) + 2 * binomial(n, k + 1);
}

std::vector<const FormEntry*> FormsCatalog::stratum(int rank) const {
  std::vector<const FormEntry*> out;
  for (const auto& e : entries_) {
    if (e.rank == rank) {
      out.push_back(&e);
    }
  }
  return out;
}

bool FormsCatalog::contains_word(const Word& w) const {
  return by_word_.count(w) > 0;
}

const FormEntry& FormsCatalog::entry_for_word(const Word& w) const {
  auto it = by_word_.find(w);
  if (it == by_word_.end()) {
    throw NotInMonoidError("word is not a catalog form");
  }
  return entries_[it->second];
}

const Word& FormsCatalog::word_for(const PartialInjection& a) const {
  auto it = by_value_.find(a);
  if (it == by_value_.end()) {
    throw NotInMonoidError(a.to_text() + " is not represented in the catalog");
  }
  return entries_[it->second].word;
}

bool FormsCatalog::represents(const PartialInjection& a) const {
  return by_value_.count(a) > 0;
}

VerificationReport check_bijection(const FormsCatalog& catalog) {
  int n = catalog.n();
  VerificationReport report(n, "forms_bijection");
  Stopwatch sw;

  MonoidSet odp = closure(generating_set(FamilyKind::A, n));
  bool distinct = true;
  bool inside = true;
  bool ranks_ok = true;
  std::set<PartialInjection> values;
  for (const auto& e : catalog.entries()) {
    if (!values.insert(e.value).second) {
      distinct = false;
    }
    if (!odp.contains(e.value)) {
      inside = false;
    }
    if (e.value.rank() != e.rank) {
      ranks_ok = false;
    }
  }
  report.add("values.pairwise_distinct", distinct);
  report.add("values.in_odp", inside);
  report.add("stratum.ranks", ranks_ok);
  report.add("count.eq.odp",
             catalog.entries().size() == odp.size(),
             std::to_string(catalog.entries().size()) + " vs " + std::to_string(odp.size()));
  bool strata_ok = true;
  for (int k = 0; k <= n; ++k) {
    if (static_cast<long long>(catalog.stratum(k).size()) !=
        FormsCatalog::size_formula(n, k)) {
      strata_ok = false;
    }
  }
  report.add("strata.counts", strata_ok);
  if (!report.checks.empty()) {
    report.checks.front().timing_ms = sw.elapsed_ms();
  }
  return report;
}

ExtensionForms build_extension_forms(int n) {
  FormsCatalog catalog = FormsCatalog::build(n);
  return build_extension_forms(catalog);
}

ExtensionForms build_extension_forms(const FormsCatalog& catalog) {
  const int n = catalog.n();
  ExtensionForms ext;
  ext.n = n;

  ext.u_words.resize(n + 1);
  ext.v_words.resize(n + 1);
  for (int i = 1; i <= n; ++i) {
    ext.u_words[i] = catalog.word_for(PartialInjection::rank_one(n, i, n));
    ext.v_words[i] = catalog.word_for(PartialInjection::rank_one(n, 1, i));
  }

  const Word anchor = word_pow(word_of({letter_x(n)}), n - 1);  // represents {n -> 1}
  const Word zero_word = word_pow(word_of({letter_x(n)}), n);   // W_0

  // Working form set: every rank >= 2 word of W (plus the empty word) stays;
  // rank <= 1 elements are represented by u_i x_n^{n-1} v_j instead.
  for (const auto& e : catalog.entries()) {
    if (e.rank >= 2 || e.word.empty()) {
      ext.working.push_back(e.word);
      ext.w_beta.push_back(e.word);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Word w = ext.u_words[i] + anchor + ext.v_words[j];
      if (catalog.contains_word(w)) {
        ++ext.literal_overlap;
      }
      ext.w_alpha.push_back(std::move(w));
    }
  }
  ext.w_alpha.push_back(zero_word);
  for (const auto& w : ext.w_alpha) {
    ext.working.push_back(w);
  }

  ext.w_bar = ext.working;
  const Letter h = letter_h(n);
  for (const auto& w : ext.w_beta) {
    ext.w_bar.push_back(w + Word(1, h));
  }

  // Internal consistency: the replacement words must still be a set of forms
  // (one word per rank <= 1 element), every alpha word must contain the
  // anchor factor, and the extension count identity must hold.
  Assignment b = standard_assignment(FamilyKind::B, n);
  std::set<PartialInjection> seen;
  for (const auto& w : ext.working) {
    if (!seen.insert(evaluate(w, b)).second) {
      throw Error("replacement broke the forms bijection at n=" + std::to_string(n));
    }
  }
  for (const auto& w : ext.w_alpha) {
    if (w.find(anchor) == Word::npos) {
      throw Error("anchor word is not a factor of an alpha form");
    }
  }
  auto formulas = cardinality_formulas(n);
  if (static_cast<long long>(ext.w_bar.size()) != formulas.dp) {
    throw Error("|W-bar| = " + std::to_string(ext.w_bar.size()) + " but |DP_n| = " +
                std::to_string(formulas.dp));
  }
  return ext;
}

}  // namespace isomon
