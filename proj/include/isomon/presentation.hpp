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

#ifndef ISOMON_PRESENTATION_HPP
#define ISOMON_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "isomon/partial_injection.hpp"
#include "isomon/report.hpp"
#include "isomon/words.hpp"

namespace isomon {

struct Relation {
  Word lhs;
  Word rhs;
  std::string tag;  // provenance, e.g. "R3[i=2]" or "NRb2"

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

enum class PresKind { R, Rbar, U, V, Custom };

std::string to_string(PresKind k);
std::optional<PresKind> pres_kind_from_string(const std::string& s);

struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;
  PresKind kind = PresKind::Custom;
  int n = 0;

  std::optional<std::size_t> find_tag(const std::string& tag) const;
};

/// The relation families, instantiated with the index ranges as printed.
/// R is over A, Rbar and U over B, V over C. For n = 3 several families are
/// empty; the closed-form counts still match exactly.
Presentation build_presentation(PresKind kind, int n);

/// Closed-form relation counts; build_presentation agrees exactly.
long long relation_count_formula(PresKind kind, int n);

/// Letter -> element binding, total on the relevant alphabet.
class Assignment {
 public:
  explicit Assignment(int ground_n);
  void bind(Letter l, PartialInjection value);
  bool bound(Letter l) const;
  const PartialInjection& at(Letter l) const;
  int ground_n() const { return n_; }

 private:
  int n_;
  std::vector<std::optional<PartialInjection>> by_code_;
};

/// x_i -> gen_x(n,i) and h -> gen_h(n), restricted to the family's letters.
Assignment standard_assignment(FamilyKind kind, int n);

/// Left-to-right fold of composition; the empty word maps to the identity.
PartialInjection evaluate(const Word& w, const Assignment& a);

/// Per-relation satisfaction under the assignment.
VerificationReport check_relations(const Presentation& p, const Assignment& a,
                                   int jobs = 1);

/// One header line "alphabet: ..." then one "lhs = rhs  #tag" line per
/// relation.
std::string serialize_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

}  // namespace isomon

#endif  // ISOMON_PRESENTATION_HPP
