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

#include <doctest.h>

#include <map>
#include <set>

#include "isomon/errors.hpp"
#include "isomon/families.hpp"
#include "isomon/forms.hpp"
#include "isomon/util.hpp"
#include "oracles.hpp"

using namespace isomon;

TEST_SUITE("forms") {

TEST_CASE("Gould identity") {
  for (int m = 0; m <= 25; ++m) {
    for (int k = 0; k <= m; ++k) {
      long long sum = 0;
      for (int i = k; i <= m; ++i) {
        sum += binomial(i, k);
      }
      CHECK(sum == binomial(m + 1, k + 1));
    }
  }
}

TEST_CASE("stratum sizes") {
  CHECK(FormsCatalog::size_formula(4, 1) == 16);
  CHECK(FormsCatalog::size_formula(7, 7) == 1);
  CHECK(FormsCatalog::size_formula(5, 0) == 1);
  for (int n = 3; n <= 12; ++n) {
    long long total = 0;
    for (int k = 0; k <= n; ++k) {
      total += FormsCatalog::size_formula(n, k);
    }
    CHECK(total == cardinality_formulas(n).odp);
  }
}

TEST_CASE("top stratum at n=4") {
  FormsCatalog cat = FormsCatalog::build(4);
  Alphabet a = Alphabet::family(FamilyKind::A, 4);
  std::set<std::string> words;
  for (const auto* e : cat.stratum(3)) {
    words.insert(a.format(e->word));
  }
  CHECK(words == std::set<std::string>{"x1", "x2", "x3", "x4", "x3 x4", "x4 x3"});
  CHECK(cat.stratum(2).size() == 14);
  CHECK(cat.entries().size() == 38);
}

TEST_CASE("per-subset counts match the printed binomials") {
  for (int n = 3; n <= 8; ++n) {
    FormsCatalog cat = FormsCatalog::build(n);
    for (int k = 2; k <= n - 1; ++k) {
      std::map<std::string, long long> by_subset;
      for (const auto* e : cat.stratum(n - k)) {
        by_subset[e->subset]++;
      }
      std::string s = "W" + std::to_string(n - k) + ",";
      CHECK(by_subset[s + "1"] == binomial(n - 2, k) + 2 * binomial(n - 2, k - 1));
      CHECK(by_subset[s + "2"] == 2 * binomial(n - 2, k - 1));
      CHECK(by_subset[s + "3"] == binomial(n - 2, k - 2));
      long long w45 = 0, w67 = 0;
      for (int i = 2; i <= k; ++i) {
        w45 += binomial(n - i - 1, k - i);
        w67 += binomial(n - i, k - i);
      }
      CHECK(by_subset[s + "4"] == w45);
      CHECK(by_subset[s + "5"] == w45);
      CHECK(by_subset[s + "6"] == w67);
      CHECK(by_subset[s + "7"] == w67);
    }
  }
}

TEST_CASE("every stratum word has the stratum rank") {
  for (int n = 3; n <= 7; ++n) {
    FormsCatalog cat = FormsCatalog::build(n);
    for (const auto& e : cat.entries()) {
      CHECK(e.value.rank() == e.rank);
    }
  }
}

TEST_CASE("bijection onto ODP_n") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(check_bijection(FormsCatalog::build(n)).all_passed());
  }
}

TEST_CASE("word_for") {
  FormsCatalog cat = FormsCatalog::build(5);
  CHECK(cat.word_for(PartialInjection::identity(5)).empty());
  CHECK(cat.word_for(PartialInjection::empty_map(5)) ==
        word_pow(Word(1, letter_x(5)), 5));
  CHECK(cat.word_for(gen_x(5, 4)) == Word(1, letter_x(4)));
  CHECK_THROWS_AS(cat.word_for(gen_h(5)), NotInMonoidError);
}

TEST_CASE("negative control: corrupting a word breaks the bijection") {
  // Dropping a letter from x_{n-1} x_n collides with an existing form value.
  FormsCatalog cat = FormsCatalog::build(4);
  auto broken = cat.entries();
  bool collision = false;
  std::set<PartialInjection> seen;
  for (auto e : broken) {
    if (e.word.size() == 2 && e.word[0] == letter_x(3) && e.word[1] == letter_x(4)) {
      e.word.pop_back();  // now evaluates like the generator word x3
    }
    if (!seen.insert(evaluate(e.word, cat.assignment())).second) {
      collision = true;
    }
  }
  CHECK(collision);
}

TEST_CASE("extension forms") {
  for (int n = 3; n <= 5; ++n) {
    ExtensionForms ext = build_extension_forms(n);
    auto formulas = cardinality_formulas(n);
    CHECK(static_cast<long long>(ext.w_bar.size()) == formulas.dp);
    CHECK(static_cast<long long>(ext.w_alpha.size()) == formulas.rank_le_one);
    CHECK(ext.working.size() == ext.w_alpha.size() + ext.w_beta.size());

    // the anchor word is a factor of every alpha word
    Word anchor = word_pow(Word(1, letter_x(n)), n - 1);
    for (const auto& w : ext.w_alpha) {
      CHECK(w.find(anchor) != Word::npos);
    }

    // u_i x_n^{n-1} v_j represents {i -> j}
    auto a = standard_assignment(FamilyKind::A, n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Word w = ext.u_words[i] + anchor + ext.v_words[j];
        CHECK(evaluate(w, a) == PartialInjection::rank_one(n, i, j));
      }
    }
  }
  // |W-bar| = 2|W| - (n^2+1) = 22 at n=3
  CHECK(build_extension_forms(3).w_bar.size() == 22);
}

TEST_CASE("extension forms evaluate bijectively onto DP_n") {
  for (int n = 3; n <= 5; ++n) {
    ExtensionForms ext = build_extension_forms(n);
    auto b = standard_assignment(FamilyKind::B, n);
    std::set<PartialInjection> values;
    for (const auto& w : ext.w_bar) {
      CHECK(values.insert(evaluate(w, b)).second);
    }
    MonoidSet dp = closure(generating_set(FamilyKind::B, n));
    CHECK(values == std::set<PartialInjection>(dp.elements.begin(), dp.elements.end()));
  }
}

TEST_CASE("working set is still a set of forms after the replacement") {
  for (int n = 3; n <= 5; ++n) {
    ExtensionForms ext = build_extension_forms(n);
    auto a = standard_assignment(FamilyKind::A, n);
    std::set<PartialInjection> values;
    std::size_t rank_le_one = 0;
    for (const auto& w : ext.working) {
      PartialInjection v = evaluate(w, a);
      CHECK(values.insert(v).second);
      if (v.rank() <= 1) {
        ++rank_le_one;
      }
    }
    CHECK(static_cast<long long>(values.size()) == cardinality_formulas(n).odp);
    CHECK(static_cast<long long>(rank_le_one) == cardinality_formulas(n).rank_le_one);
  }
}

}  // TEST_SUITE
