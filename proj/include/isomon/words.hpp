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

#ifndef ISOMON_WORDS_HPP
#define ISOMON_WORDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isomon {

/// A letter is a small integer code. In the x/h alphabets the coding is
/// global: x_i has code i (1 <= i <= n) and h has code n + 1, so words over
/// A, B and C at the same n are directly comparable. Custom alphabets assign
/// codes 1..k in declaration order.
using Letter = char;

/// A word is the raw code sequence; the empty word denotes the monoid
/// identity. std::string gives cheap copies and hashing, which the search
/// engines rely on.
using Word = std::string;

inline Letter letter_x(int i) { return static_cast<Letter>(i); }
inline Letter letter_h(int n) { return static_cast<Letter>(n + 1); }

/// Builds a word from letter codes.
inline Word word_of(std::initializer_list<Letter> ls) { return Word(ls.begin(), ls.end()); }

/// w^k.
Word word_pow(const Word& w, int k);

enum class FamilyKind { A, B, C };

/// An ordered, named letter set. The family alphabets of a fixed n share the
/// global x/h coding; C is a strict subset of B's letters.
class Alphabet {
 public:
  Alphabet() = default;  // the empty alphabet

  /// A = {x_1..x_n}; B = A + {h}; C = {h, x_n, x_1..x_floor((n-1)/2)}.
  static Alphabet family(FamilyKind kind, int n);
  /// Arbitrary letters named in order; codes 1..names.size().
  static Alphabet custom(std::vector<std::string> names);
  /// An explicit letter subset of the x/h coding at ground size n.
  static Alphabet xh_subset(int n, std::vector<Letter> letters);

  int ground_n() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool contains(Letter l) const;
  bool pure(const Word& w) const;

  const std::string& name(Letter l) const;
  std::optional<Letter> find(std::string_view name) const;

  /// Space-separated letter names; the empty word prints as "1".
  std::string format(const Word& w) const;
  /// Inverse of format. Throws UnboundLetterError on an unknown token.
  Word parse(std::string_view text) const;

 private:
  int n_ = 0;  // ground-set size for x/h alphabets, 0 for custom
  std::vector<Letter> letters_;
  std::vector<std::string> names_;  // indexed by code
};

}  // namespace isomon

#endif  // ISOMON_WORDS_HPP
