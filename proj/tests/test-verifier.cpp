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

#include <set>

#include "isomon/errors.hpp"
#include "isomon/verifier.hpp"

using namespace isomon;

namespace {

std::vector<Word> catalog_words(const FormsCatalog& cat) {
  std::vector<Word> words;
  for (const auto& e : cat.entries()) {
    words.push_back(e.word);
  }
  return words;
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("guess_and_prove certifies the order-preserving presentation at n=3") {
  FormsCatalog cat = FormsCatalog::build(3);
  Presentation p = build_presentation(PresKind::R, 3);
  MonoidSet odp = closure(generating_set(FamilyKind::A, 3));
  GuessProveReport gp = guess_and_prove(p, standard_assignment(FamilyKind::A, 3), odp,
                                        catalog_words(cat), {});
  CHECK(gp.verdict == GuessProveReport::Verdict::Defined);
  CHECK(gp.relations_hold);
  CHECK(gp.bijection_ok);
  CHECK(gp.cardinality_ok);
  CHECK(gp.closure_table.size() == 16 * 3);
  for (const auto& e : gp.closure_table) {
    CHECK(e.status == SearchStatus::Found);
  }
}

TEST_CASE("negative control: dropping R12 starves the closure at (x_n^n, x_n)") {
  Presentation p = build_presentation(PresKind::R, 4);
  auto idx = p.find_tag("R12");
  REQUIRE(idx.has_value());
  p.relations.erase(p.relations.begin() + *idx);

  FormsCatalog cat = FormsCatalog::build(4);
  MonoidSet odp = closure(generating_set(FamilyKind::A, 4));
  SearchLimits limits;
  limits.max_states = 200000;  // enough to settle every other pair
  GuessProveReport gp = guess_and_prove(p, standard_assignment(FamilyKind::A, 4), odp,
                                        catalog_words(cat), limits);
  CHECK(gp.verdict == GuessProveReport::Verdict::Inconclusive);
  Word xn_n = word_pow(Word(1, letter_x(4)), 4);
  bool reported = false;
  for (const auto& [w, l] : gp.failing_pairs) {
    if (w == xn_n && l == letter_x(4)) {
      reported = true;
    }
  }
  CHECK(reported);
}

TEST_CASE("negative control: a missing word refutes the form-set claims") {
  FormsCatalog cat = FormsCatalog::build(3);
  std::vector<Word> words = catalog_words(cat);
  words.erase(std::find(words.begin(), words.end(), Word(1, letter_x(1))));
  Presentation p = build_presentation(PresKind::R, 3);
  MonoidSet odp = closure(generating_set(FamilyKind::A, 3));
  GuessProveReport gp =
      guess_and_prove(p, standard_assignment(FamilyKind::A, 3), odp, words, {});
  CHECK(gp.verdict == GuessProveReport::Verdict::Refuted);
  CHECK_FALSE(gp.bijection_ok);
}

TEST_CASE("extension presentation matches the built family") {
  for (int n = 3; n <= 5; ++n) {
    ExtensionResult ext = build_extension_presentation(paper_extension_spec(n));
    CHECK(static_cast<long long>(ext.presentation.relations.size()) ==
          relation_count_formula(PresKind::Rbar, n));
    Presentation rbar = build_presentation(PresKind::Rbar, n);
    std::set<std::pair<Word, Word>> got, want;
    for (const auto& r : ext.presentation.relations) {
      got.emplace(r.lhs, r.rhs);
    }
    for (const auto& r : rbar.relations) {
      want.emplace(r.lhs, r.rhs);
    }
    CHECK(got == want);
    CHECK(static_cast<long long>(ext.w_bar.size()) == cardinality_formulas(n).dp);
  }
  CHECK(build_extension_presentation(paper_extension_spec(3)).w_bar.size() == 22);
}

TEST_CASE("extension conjugation words") {
  ExtensionSpec spec = paper_extension_spec(5);
  // h x_1 = x_3 h
  bool found = false;
  for (const auto& [x, v] : spec.conjugations) {
    if (x == letter_x(1)) {
      CHECK(v == Word(1, letter_x(3)));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("extension validation rejects a broken spec") {
  ExtensionSpec spec = paper_extension_spec(3);
  spec.anchor_image = Word(1, letter_x(1));  // u_0 y no longer evaluates to v_0
  CHECK_THROWS_AS(build_extension_presentation(spec), SpecInvalidError);

  ExtensionSpec spec2 = paper_extension_spec(3);
  spec2.w_alpha.push_back(Word(1, letter_x(1)));  // lacks the anchor factor
  CHECK_THROWS_AS(build_extension_presentation(spec2), SpecInvalidError);
}

TEST_CASE("guess_and_prove certifies the extension at n=3") {
  ExtensionResult ext = build_extension_presentation(paper_extension_spec(3));
  MonoidSet dp = closure(generating_set(FamilyKind::B, 3));
  GuessProveReport gp = guess_and_prove(ext.presentation,
                                        standard_assignment(FamilyKind::B, 3), dp,
                                        ext.w_bar, {});
  CHECK(gp.verdict == GuessProveReport::Verdict::Defined);
}

TEST_CASE("tietze T1 accepts a certified consequence") {
  Presentation p = build_presentation(PresKind::R, 4);
  TietzeStep t1{TietzeStep::Kind::AddRelation,
                {p.alphabet.parse("x1 x3 x3"), p.alphabet.parse("x3 x3"), "extra"},
                0,
                {}};
  Presentation q = tietze_step(p, t1, {});
  CHECK(q.relations.size() == p.relations.size() + 1);

  // and rejects one that is not derivable within the limits
  TietzeStep bogus{TietzeStep::Kind::AddRelation,
                   {p.alphabet.parse("x1"), p.alphabet.parse("x2"), "bogus"},
                   0,
                   {}};
  CHECK_THROWS_AS(tietze_step(p, bogus, {}), ConsequenceNotCertifiedError);
}

TEST_CASE("tietze T2 needs the remainder to prove the deleted relation") {
  Presentation p = build_presentation(PresKind::R, 4);
  // R12 is not a consequence of the others within reachable limits
  auto idx = p.find_tag("R12");
  SearchLimits limits;
  limits.max_states = 20000;
  TietzeStep t2{TietzeStep::Kind::DeleteRelation, p.relations[*idx], 0, {}};
  CHECK_THROWS_AS(tietze_step(p, t2, limits), ConsequenceNotCertifiedError);

  // a freshly added consequence can be deleted again
  TietzeStep t1{TietzeStep::Kind::AddRelation,
                {p.alphabet.parse("x1 x3 x3"), p.alphabet.parse("x3 x3"), "extra"},
                0,
                {}};
  Presentation q = tietze_step(p, t1, {});
  TietzeStep t2b{TietzeStep::Kind::DeleteRelation, q.relations.back(), 0, {}};
  Presentation r = tietze_step(q, t2b, {});
  CHECK(r.relations.size() == p.relations.size());
}

TEST_CASE("tietze T3/T4 substitute the defining word") {
  Presentation p = build_presentation(PresKind::U, 4);
  // x3 = h x4 h is a consequence; add it, then eliminate x3.
  TietzeStep t1{TietzeStep::Kind::AddRelation,
                {p.alphabet.parse("x3"), p.alphabet.parse("h x4 h"), "def"},
                0,
                {}};
  Presentation q = tietze_step(p, t1, {});
  TietzeStep t4{TietzeStep::Kind::EliminateGenerator, {}, letter_x(3), {}};
  Presentation r = tietze_step(q, t4, {});
  CHECK_FALSE(r.alphabet.contains(letter_x(3)));
  for (const auto& rel : r.relations) {
    CHECK(rel.lhs.find(letter_x(3)) == Word::npos);
    CHECK(rel.rhs.find(letter_x(3)) == Word::npos);
  }

  // the R9 instance x3 x4 x3 = x3 becomes h x4 h x4 h x4 h = h x4 h
  Presentation base{Alphabet::family(FamilyKind::B, 4), {}, PresKind::Custom, 4};
  base.relations.push_back({base.alphabet.parse("x3 x4 x3"), base.alphabet.parse("x3"), "R9"});
  base.relations.push_back({base.alphabet.parse("x3"), base.alphabet.parse("h x4 h"), "def"});
  Presentation subst = tietze_step(
      base, TietzeStep{TietzeStep::Kind::EliminateGenerator, {}, letter_x(3), {}}, {});
  REQUIRE(subst.relations.size() == 1);
  CHECK(subst.alphabet.format(subst.relations[0].lhs) == "h x4 h x4 h x4 h");
  CHECK(subst.alphabet.format(subst.relations[0].rhs) == "h x4 h");

  CHECK_THROWS_AS(
      tietze_step(p, TietzeStep{TietzeStep::Kind::EliminateGenerator, {}, letter_x(3), {}},
                  {}),
      NoDefiningRelationError);
}

TEST_CASE("U equivalence claims certify in both directions") {
  for (int n = 3; n <= 4; ++n) {
    VerificationReport report = check_U_equivalences(n, {});
    CHECK(report.all_passed());
  }
}

TEST_CASE("V is reconstructed from U by generator elimination") {
  for (int n = 3; n <= 5; ++n) {
    ChainResult chain = derive_V_from_U(n, {});
    CHECK(chain.report.all_passed());
    Presentation v = build_presentation(PresKind::V, n);
    std::set<std::pair<Word, Word>> got, want;
    for (const auto& r : chain.transformed.relations) {
      got.emplace(r.lhs, r.rhs);
    }
    for (const auto& r : v.relations) {
      want.emplace(r.lhs, r.rhs);
    }
    CHECK(got == want);
  }
  // even n has no hat relation; n=6 also exercises the certified residuals
  ChainResult even = derive_V_from_U(6, {});
  CHECK(even.report.all_passed());
  CHECK_FALSE(build_presentation(PresKind::V, 6).find_tag("NRh1").has_value());
  CHECK(derive_V_from_U(6, {}).residual_certified.size() > 0);
}

TEST_CASE("the R2 split reproduces both Rb2 families at n=6") {
  Presentation v = build_presentation(PresKind::V, 6);
  int fam1 = 0, fam2 = 0;
  for (const auto& rel : v.relations) {
    if (rel.tag.rfind("Rb2[", 0) == 0) {
      if (rel.lhs.size() == 2) {
        ++fam1;
      } else {
        ++fam2;
      }
    }
  }
  CHECK(fam1 == 1);  // 1 <= i < j <= 2
  CHECK(fam2 == 4);  // i in {1,2}, j in {3,4}
}

}  // TEST_SUITE
