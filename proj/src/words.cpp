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

#include "isomon/words.hpp"

#include <sstream>

#include "isomon/errors.hpp"

namespace isomon {

Word word_pow(const Word& w, int k) {
  Word r;
  r.reserve(w.size() * k);
  for (int i = 0; i < k; ++i) {
    r += w;
  }
  return r;
}

Alphabet Alphabet::family(FamilyKind kind, int n) {
  if (n < 3) {
    throw UnsupportedNError("family alphabets need n >= 3, got " + std::to_string(n));
  }
  Alphabet a;
  a.n_ = n;
  a.names_.resize(n + 2);
  for (int i = 1; i <= n; ++i) {
    a.names_[i] = "x" + std::to_string(i);
  }
  a.names_[n + 1] = "h";
  switch (kind) {
    case FamilyKind::A:
      for (int i = 1; i <= n; ++i) {
        a.letters_.push_back(letter_x(i));
      }
      break;
    case FamilyKind::B:
      for (int i = 1; i <= n; ++i) {
        a.letters_.push_back(letter_x(i));
      }
      a.letters_.push_back(letter_h(n));
      break;
    case FamilyKind::C:
      a.letters_.push_back(letter_h(n));
      a.letters_.push_back(letter_x(n));
      for (int i = 1; i <= (n - 1) / 2; ++i) {
        a.letters_.push_back(letter_x(i));
      }
      break;
  }
  return a;
}

Alphabet Alphabet::xh_subset(int n, std::vector<Letter> letters) {
  Alphabet a;
  a.n_ = n;
  a.names_.resize(n + 2);
  for (int i = 1; i <= n; ++i) {
    a.names_[i] = "x" + std::to_string(i);
  }
  a.names_[n + 1] = "h";
  for (Letter l : letters) {
    std::size_t code = static_cast<unsigned char>(l);
    if (code == 0 || code > static_cast<std::size_t>(n) + 1) {
      throw UnboundLetterError("letter code " + std::to_string(code) +
                               " outside the x/h coding for n=" + std::to_string(n));
    }
  }
  a.letters_ = std::move(letters);
  return a;
}

Alphabet Alphabet::custom(std::vector<std::string> names) {
  Alphabet a;
  a.names_.resize(names.size() + 1);
  for (std::size_t i = 0; i < names.size(); ++i) {
    a.letters_.push_back(static_cast<Letter>(i + 1));
    a.names_[i + 1] = std::move(names[i]);
  }
  return a;
}

bool Alphabet::contains(Letter l) const {
  for (Letter x : letters_) {
    if (x == l) {
      return true;
    }
  }
  return false;
}

bool Alphabet::pure(const Word& w) const {
  for (Letter l : w) {
    if (!contains(l)) {
      return false;
    }
  }
  return true;
}

const std::string& Alphabet::name(Letter l) const {
  std::size_t code = static_cast<unsigned char>(l);
  if (code == 0 || code >= names_.size() || names_[code].empty()) {
    throw UnboundLetterError("letter code " + std::to_string(code) + " has no name");
  }
  return names_[code];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (Letter l : letters_) {
    if (names_[static_cast<unsigned char>(l)] == name) {
      return l;
    }
  }
  return std::nullopt;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) {
    return "1";
  }
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      s += ' ';
    }
    s += name(w[i]);
  }
  return s;
}

Word Alphabet::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) {
    tokens.push_back(tok);
  }
  if (tokens.size() == 1 && tokens[0] == "1") {
    return {};
  }
  Word w;
  for (const auto& tok : tokens) {
    auto l = find(tok);
    if (!l) {
      throw UnboundLetterError("unknown letter '" + tok + "'");
    }
    w.push_back(*l);
  }
  return w;
}

}  // namespace isomon
