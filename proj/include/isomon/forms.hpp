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

#ifndef ISOMON_FORMS_HPP
#define ISOMON_FORMS_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "isomon/partial_injection.hpp"
#include "isomon/presentation.hpp"
#include "isomon/report.hpp"
#include "isomon/words.hpp"

namespace isomon {

struct FormEntry {
  Word word;
  int rank;            // of the transformation the word evaluates to
  std::string subset;  // "W4", "W2,3", "W0" or "1" for the empty word
  PartialInjection value;
};

/// The stratified word set W: one word per monoid element, organized by rank.
/// Construction instantiates the seven set-builder families per stratum with
/// strictly increasing prefix index sequences; the standalone words are the
/// empty-prefix instances and appear exactly once.
class FormsCatalog {
 public:
  static FormsCatalog build(int n);

  int n() const { return n_; }
  const std::vector<FormEntry>& entries() const { return entries_; }
  const Assignment& assignment() const { return assignment_; }

  std::vector<const FormEntry*> stratum(int rank) const;
  static long long size_formula(int n, int k);

  bool contains_word(const Word& w) const;
  const FormEntry& entry_for_word(const Word& w) const;

  /// The unique catalog word evaluating to a. Throws NotInMonoidError.
  const Word& word_for(const PartialInjection& a) const;
  bool represents(const PartialInjection& a) const;

 private:
  explicit FormsCatalog(int n);
  void insert(Word w, const std::string& subset);

  int n_;
  Assignment assignment_;
  std::vector<FormEntry> entries_;
  std::unordered_map<Word, std::size_t> by_word_;
  std::unordered_map<PartialInjection, std::size_t> by_value_;
};

/// Evaluates every word: pairwise-distinct values, exactly ODP_n, stratum
/// ranks correct, and the per-stratum counts match the closed form.
VerificationReport check_bijection(const FormsCatalog& catalog);

/// The extension data: rank <= 1 words are replaced by u_i x_n^{n-1} v_j so
/// the anchor word x_n^{n-1} is a factor of every rank <= 1 representative,
/// then the order-reversing half is reached by appending h to each word of
/// the beta part.
struct ExtensionForms {
  int n = 0;
  std::vector<Word> u_words;  // u_words[i] represents {i -> n}, 1-based
  std::vector<Word> v_words;  // v_words[j] represents {1 -> j}, 1-based
  std::vector<Word> working;  // W with rank <= 1 words swapped for the u.x.v words
  std::vector<Word> w_alpha;  // the u_i x_n^{n-1} v_j words plus x_n^n
  std::vector<Word> w_beta;   // working minus w_alpha
  std::vector<Word> w_bar;    // working plus { w h : w in w_beta }
  std::size_t literal_overlap = 0;  // |{u_i x v_j} ∩ W|, recorded for reference
};

ExtensionForms build_extension_forms(int n);
ExtensionForms build_extension_forms(const FormsCatalog& catalog);

}  // namespace isomon

#endif  // ISOMON_FORMS_HPP
