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

#ifndef ISOMON_VERIFIER_HPP
#define ISOMON_VERIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isomon/families.hpp"
#include "isomon/forms.hpp"
#include "isomon/kb.hpp"
#include "isomon/limits.hpp"
#include "isomon/presentation.hpp"
#include "isomon/report.hpp"
#include "isomon/rewrite.hpp"

namespace isomon {

/// Outcome of the finite-monoid presentation check. `Defined` certifies all
/// three conditions: relations satisfied, the word set closed under
/// right-multiplication by generators via replayable derivations, and
/// |W| <= |M| (with |W| = |M| witnessed by the evaluation bijection).
/// `Refuted` marks a semantic failure; search starvation is only ever
/// `Inconclusive`.
struct GuessProveReport {
  enum class Verdict { Defined, Inconclusive, Refuted };

  struct ClosureEntry {
    Word source;
    Letter letter;
    Word target;  // empty when no target exists
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Derivation> derivation;
  };

  bool relations_hold = false;
  bool cardinality_ok = false;
  bool bijection_ok = false;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ClosureEntry> closure_table;
  std::vector<std::pair<Word, Letter>> failing_pairs;
  VerificationReport report;
};

std::string to_string(GuessProveReport::Verdict v);

GuessProveReport guess_and_prove(const Presentation& p, const Assignment& a,
                                 const MonoidSet& monoid, const std::vector<Word>& words,
                                 const SearchLimits& limits, int jobs = 1);

/// Data for the submonoid-extension construction: a base presentation with a
/// set of forms split into an alpha part (every word carries the anchor
/// factor) and a beta part, plus an involution letter with its conjugation
/// and anchor relations.
struct ExtensionSpec {
  Presentation base;
  Assignment assignment;  // binds the base alphabet and the involution letter
  Letter involution;
  std::vector<std::pair<Letter, Word>> conjugations;  // (x_i, v_i): y x_i = v_i y
  Word anchor;        // u_0
  Word anchor_image;  // v_0: u_0 y = v_0
  std::vector<Word> w_alpha;
  std::vector<Word> w_beta;
  std::optional<std::size_t> target_size;  // |T| when known
};

struct ExtensionResult {
  Presentation presentation;  // base + NR0 + NR1 + NR2
  std::vector<Word> w_bar;
  VerificationReport report;
};

/// Validates the spec invariants semantically, then emits the extended
/// presentation and the extended form set. Throws SpecInvalidError naming the
/// first violated invariant.
ExtensionResult build_extension_presentation(const ExtensionSpec& spec);

/// The ODP_n-inside-DP_n instance with y = h.
ExtensionSpec paper_extension_spec(int n);

struct TietzeStep {
  enum class Kind { AddRelation, DeleteRelation, AddGenerator, EliminateGenerator };
  Kind kind;
  Relation relation;   // AddRelation / DeleteRelation
  Letter letter = 0;   // AddGenerator / EliminateGenerator
  Word defining;       // AddGenerator: the word the new letter names
};

/// One elementary presentation transformation. Add/delete certify the
/// consequence with a bounded search and throw ConsequenceNotCertifiedError
/// when it cannot be replayed; elimination substitutes the defining word
/// everywhere and drops relations that become trivial.
Presentation tietze_step(const Presentation& p, const TietzeStep& step,
                         const SearchLimits& limits);

/// The five equivalence claims that turn Rbar into U, each certified in both
/// directions inside the NR0+NR1 context, plus the derivation of the full
/// conjugation family from its restricted half.
VerificationReport check_U_equivalences(int n, const SearchLimits& limits, int jobs = 1);

struct ChainResult {
  Presentation transformed;  // U after elimination, reduction and cleanup
  std::vector<Relation> residual_certified;  // dropped via certified consequence
  VerificationReport report;
};

/// Eliminates the redundant generators from U, reduces the squared
/// involution, drops trivial and duplicate relations, and compares the
/// result with the built V relation set. Residual relations that are not
/// literal members of V must be certified consequences of V; anything else
/// is reported as a mismatch.
ChainResult derive_V_from_U(int n, const SearchLimits& limits);

/// Runs every check of the suite for each n in [lo, hi], with per-check n
/// caps for the enumeration- and search-bounded parts.
VerificationReport full_report(int n_lo, int n_hi, const SearchLimits& limits,
                               int jobs = 1);

}  // namespace isomon

#endif  // ISOMON_VERIFIER_HPP
