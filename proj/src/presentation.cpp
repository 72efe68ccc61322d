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

#include "isomon/presentation.hpp"

#include <sstream>

#include "isomon/errors.hpp"
#include "isomon/families.hpp"
#include "isomon/util.hpp"

namespace isomon {

namespace {

std::string idx(const std::string& family, int i) {
  return family + "[i=" + std::to_string(i) + "]";
}

std::string idx2(const std::string& family, int i, int j) {
  return family + "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
}

// x_a x_{a-1} ... x_b (descending); empty if a < b.
Word descending_run(int a, int b) {
  Word w;
  for (int i = a; i >= b; --i) {
    w.push_back(letter_x(i));
  }
  return w;
}

// x_a x_{a+1} ... x_b (ascending); empty if a > b.
Word ascending_run(int a, int b) {
  Word w;
  for (int i = a; i <= b; ++i) {
    w.push_back(letter_x(i));
  }
  return w;
}

void add(Presentation& p, Word lhs, Word rhs, std::string tag) {
  p.relations.push_back({std::move(lhs), std::move(rhs), std::move(tag)});
}

// (R_1)..(R_12) over the alphabet A.
void append_R(Presentation& p, int n) {
  const Letter xn = letter_x(n);
  const Letter xn1 = letter_x(n - 1);
  const Letter xn2 = letter_x(n - 2);
  const Letter x1 = letter_x(1);
  for (int i = 1; i <= n - 2; ++i) {
    add(p, word_of({letter_x(i), letter_x(i)}), word_of({letter_x(i)}), idx("R1", i));
  }
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      add(p, word_of({letter_x(i), letter_x(j)}), word_of({letter_x(j), letter_x(i)}),
          idx2("R2", i, j));
    }
  }
  for (int i = 1; i <= n - 3; ++i) {
    add(p, word_of({xn1, letter_x(i)}), word_of({letter_x(i + 1), xn1}), idx("R3", i));
  }
  for (int i = 1; i <= n - 3; ++i) {
    add(p, word_of({xn, letter_x(i + 1)}), word_of({letter_x(i), xn}), idx("R4", i));
  }
  add(p, word_of({xn1, xn1, xn}), word_of({x1, xn1}), "R5");
  add(p, word_of({xn, xn1, xn1}), word_of({xn1, xn2}), "R6");
  add(p, word_of({xn, xn, xn1}), word_of({xn2, xn}), "R7");
  add(p, word_of({xn1, xn, xn}), word_of({xn, x1}), "R8");
  add(p, word_of({xn1, xn, xn1}), word_of({xn1}), "R9");
  add(p, word_of({xn, xn1, xn}), word_of({xn}), "R10");
  Word r11_rhs = ascending_run(1, n - 2);
  r11_rhs.push_back(xn1);
  r11_rhs.push_back(xn2);
  add(p, word_pow(word_of({xn}), n), std::move(r11_rhs), "R11");
  add(p, word_pow(word_of({xn}), n + 1), word_pow(word_of({xn}), n), "R12");
}

// (NR_0), (NR_1), (NR_2) over B, in the printed order.
void append_NR(Presentation& p, int n) {
  const Letter h = letter_h(n);
  const Letter xn = letter_x(n);
  const Letter xn1 = letter_x(n - 1);
  add(p, word_of({h, h}), Word{}, "NR0");
  add(p, word_of({h, xn1}), word_of({xn, h}), idx("NR1", n - 1));
  add(p, word_of({h, xn}), word_of({xn1, h}), idx("NR1", n));
  for (int i = 1; i <= n - 2; ++i) {
    add(p, word_of({h, letter_x(i)}), word_of({letter_x(n - i - 1), h}), idx("NR1", i));
  }
  Word nr2_lhs = word_pow(word_of({xn}), n - 1);
  nr2_lhs.push_back(h);
  add(p, std::move(nr2_lhs), descending_run(n, 1), "NR2");
}

Presentation build_R(int n) {
  Presentation p{Alphabet::family(FamilyKind::A, n), {}, PresKind::R, n};
  append_R(p, n);
  return p;
}

Presentation build_Rbar(int n) {
  Presentation p{Alphabet::family(FamilyKind::B, n), {}, PresKind::Rbar, n};
  append_R(p, n);
  append_NR(p, n);
  return p;
}

Presentation build_U(int n) {
  Presentation p{Alphabet::family(FamilyKind::B, n), {}, PresKind::U, n};
  const Letter h = letter_h(n);
  const Letter xn = letter_x(n);
  const Letter xn1 = letter_x(n - 1);
  const Letter x1 = letter_x(1);
  const int m = (n - 1) / 2;
  for (int i = 1; i <= m; ++i) {
    add(p, word_of({letter_x(i), letter_x(i)}), word_of({letter_x(i)}), idx("Rb1", i));
  }
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      add(p, word_of({letter_x(i), letter_x(j)}), word_of({letter_x(j), letter_x(i)}),
          idx2("R2", i, j));
    }
  }
  for (int i = 1; i <= n - 3; ++i) {
    add(p, word_of({xn, letter_x(i + 1)}), word_of({letter_x(i), xn}), idx("R4", i));
  }
  add(p, word_of({xn, xn, h, xn, h}), word_of({h, x1, h, xn}), "Rb7");
  add(p, word_of({h, xn, h, xn, xn}), word_of({xn, x1}), "Rb8");
  add(p, word_of({xn, h, xn, h, xn}), word_of({xn}), "Rb10");
  Word r11_rhs = ascending_run(1, n - 2);
  r11_rhs.push_back(xn1);
  r11_rhs.push_back(letter_x(n - 2));
  add(p, word_pow(word_of({xn}), n), std::move(r11_rhs), "R11");
  add(p, word_pow(word_of({xn}), n + 1), word_pow(word_of({xn}), n), "R12");
  add(p, word_of({h, h}), Word{}, "NR0");
  add(p, word_of({h, xn}), word_of({xn1, h}), idx("NRb1", n));
  for (int i = 1; i <= m; ++i) {
    add(p, word_of({h, letter_x(i)}), word_of({letter_x(n - i - 1), h}), idx("NRb1", i));
  }
  Word nr2_lhs = word_pow(word_of({xn}), n - 1);
  nr2_lhs.push_back(h);
  add(p, std::move(nr2_lhs), descending_run(n, 1), "NR2");
  return p;
}

Presentation build_V(int n) {
  Presentation p{Alphabet::family(FamilyKind::C, n), {}, PresKind::V, n};
  const Letter h = letter_h(n);
  const Letter xn = letter_x(n);
  const Letter x1 = letter_x(1);
  const int m = (n - 1) / 2;        // floor; largest kept x-index below x_n
  const int q = (n - 2) / 2;        // ceil((n-3)/2)
  for (int i = 1; i <= m; ++i) {
    add(p, word_of({letter_x(i), letter_x(i)}), word_of({letter_x(i)}), idx("Rb1", i));
  }
  for (int i = 1; i < m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      add(p, word_of({letter_x(i), letter_x(j)}), word_of({letter_x(j), letter_x(i)}),
          idx2("Rb2", i, j));
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = m + 1; j <= n - 2; ++j) {
      const Letter c = letter_x(n - j - 1);
      add(p, word_of({letter_x(i), h, c, h}), word_of({h, c, h, letter_x(i)}),
          idx2("Rb2", i, j));
    }
  }
  for (int i = 1; i <= (n - 3) / 2; ++i) {
    add(p, word_of({xn, letter_x(i + 1)}), word_of({letter_x(i), xn}), idx("Rb4", i));
  }
  if (m <= n - 3) {  // the boundary instance of (R_4); absent for n = 3
    add(p, word_of({xn, h, letter_x(q), h}), word_of({letter_x(m), xn}), idx("Rb4", m));
  }
  for (int i = 1; i <= (n >= 5 ? (n - 4) / 2 : 0); ++i) {  // ceil((n-5)/2)
    add(p, word_of({xn, h, letter_x(i), h}), word_of({h, letter_x(i + 1), h, xn}),
        idx("Rb4h", i));
  }
  add(p, word_of({xn, xn, h, xn, h}), word_of({h, x1, h, xn}), "Rb7");
  add(p, word_of({h, xn, h, xn, xn}), word_of({xn, x1}), "Rb8");
  add(p, word_of({xn, h, xn, h, xn}), word_of({xn}), "Rb10");
  // Rb11: generator elimination applied to (R_11). For n >= 4 this equals the
  // closed display x_1..x_m h x_q..x_1 x_n x_1 h; at n = 3 the final letter of
  // (R_11) is the kept x_1, so the literal substitution yields x_1 h x_n h x_1
  // instead (the two are interchangeable modulo NRh1).
  Word rb11_rhs;
  if (n == 3) {
    rb11_rhs = word_of({x1, h, xn, h, x1});
  } else {
    rb11_rhs = ascending_run(1, m);
    rb11_rhs.push_back(h);
    rb11_rhs += descending_run(q, 1);
    rb11_rhs.push_back(xn);
    rb11_rhs.push_back(x1);
    rb11_rhs.push_back(h);
  }
  add(p, word_pow(word_of({xn}), n), std::move(rb11_rhs), "Rb11");
  add(p, word_pow(word_of({xn}), n + 1), word_pow(word_of({xn}), n), "R12");
  add(p, word_of({h, h}), Word{}, "NR0");
  if (n % 2 == 1) {
    add(p, word_of({h, letter_x(m)}), word_of({letter_x(m), h}), "NRh1");
  }
  Word nrb2_lhs = word_pow(word_of({xn}), n - 1);
  nrb2_lhs.push_back(h);
  Word nrb2_rhs = word_of({xn, h, xn});
  nrb2_rhs += ascending_run(1, q);
  nrb2_rhs.push_back(h);
  nrb2_rhs += descending_run(m, 1);
  add(p, std::move(nrb2_lhs), std::move(nrb2_rhs), "NRb2");
  return p;
}

}  // namespace

std::string to_string(PresKind k) {
  switch (k) {
    case PresKind::R:
      return "R";
    case PresKind::Rbar:
      return "Rbar";
    case PresKind::U:
      return "U";
    case PresKind::V:
      return "V";
    case PresKind::Custom:
      return "custom";
  }
  return "custom";
}

std::optional<PresKind> pres_kind_from_string(const std::string& s) {
  if (s == "R") {
    return PresKind::R;
  }
  if (s == "Rbar") {
    return PresKind::Rbar;
  }
  if (s == "U") {
    return PresKind::U;
  }
  if (s == "V") {
    return PresKind::V;
  }
  return std::nullopt;
}

std::optional<std::size_t> Presentation::find_tag(const std::string& tag) const {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].tag == tag) {
      return i;
    }
  }
  return std::nullopt;
}

Presentation build_presentation(PresKind kind, int n) {
  if (n < 3) {
    throw UnsupportedNError("presentations need n >= 3, got " + std::to_string(n));
  }
  Presentation p;
  switch (kind) {
    case PresKind::R:
      p = build_R(n);
      break;
    case PresKind::Rbar:
      p = build_Rbar(n);
      break;
    case PresKind::U:
      p = build_U(n);
      break;
    case PresKind::V:
      p = build_V(n);
      break;
    case PresKind::Custom:
      throw UsageError("cannot build a custom presentation from a kind");
  }
  long long expect = relation_count_formula(kind, n);
  if (static_cast<long long>(p.relations.size()) != expect) {
    throw Error("relation count mismatch for " + to_string(kind) + " at n=" +
                std::to_string(n) + ": built " + std::to_string(p.relations.size()) +
                ", formula " + std::to_string(expect));
  }
  return p;
}

long long relation_count_formula(PresKind kind, int n) {
  if (n < 3) {
    throw UnsupportedNError("relation counts need n >= 3");
  }
  long long nn = n;
  switch (kind) {
    case PresKind::R:
      return nn * (nn + 1) / 2 + 3;
    case PresKind::Rbar:
      return (nn * nn + 3 * nn + 10) / 2;
    case PresKind::U:
      return (nn * nn - nn + 13 - (n % 2 == 0 ? 1 : -1)) / 2;
    case PresKind::V:
      if (n % 2 == 1) {
        return (3 * nn * nn + 45) / 8;
      }
      return (3 * nn * nn - 2 * nn + 40) / 8;
    case PresKind::Custom:
      throw UsageError("no closed-form count for custom presentations");
  }
  return 0;
}

Assignment::Assignment(int ground_n) : n_(ground_n), by_code_(256) {}

void Assignment::bind(Letter l, PartialInjection value) {
  if (value.ground_n() != n_) {
    throw MismatchedGroundSetError("assignment binds maps on ground set " +
                                   std::to_string(n_));
  }
  by_code_[static_cast<unsigned char>(l)] = std::move(value);
}

bool Assignment::bound(Letter l) const {
  return by_code_[static_cast<unsigned char>(l)].has_value();
}

const PartialInjection& Assignment::at(Letter l) const {
  const auto& slot = by_code_[static_cast<unsigned char>(l)];
  if (!slot) {
    throw UnboundLetterError("letter code " + std::to_string(static_cast<int>(l)) +
                             " is not bound");
  }
  return *slot;
}

Assignment standard_assignment(FamilyKind kind, int n) {
  Assignment a(n);
  Alphabet alpha = Alphabet::family(kind, n);
  for (Letter l : alpha.letters()) {
    if (l == letter_h(n)) {
      a.bind(l, gen_h(n));
    } else {
      a.bind(l, gen_x(n, static_cast<int>(l)));
    }
  }
  return a;
}

PartialInjection evaluate(const Word& w, const Assignment& a) {
  PartialInjection r = PartialInjection::identity(a.ground_n());
  for (Letter l : w) {
    r = r.then(a.at(l));
  }
  return r;
}

VerificationReport check_relations(const Presentation& p, const Assignment& a, int jobs) {
  VerificationReport report(p.n, "check_relations[" + to_string(p.kind) + "]");
  std::vector<CheckResult> results(p.relations.size());
  parallel_for(p.relations.size(), jobs, [&](std::size_t i) {
    const Relation& rel = p.relations[i];
    Stopwatch sw;
    PartialInjection lhs = evaluate(rel.lhs, a);
    PartialInjection rhs = evaluate(rel.rhs, a);
    CheckResult c;
    c.name = rel.tag;
    c.status = lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail;
    if (c.status == CheckStatus::Fail) {
      c.witness = p.alphabet.format(rel.lhs) + " -> " + lhs.to_text() + " ; " +
                  p.alphabet.format(rel.rhs) + " -> " + rhs.to_text();
    }
    c.timing_ms = sw.elapsed_ms();
    results[i] = std::move(c);
  });
  report.checks = std::move(results);
  return report;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "alphabet:";
  for (Letter l : p.alphabet.letters()) {
    out << ' ' << p.alphabet.name(l);
  }
  out << '\n';
  for (const auto& rel : p.relations) {
    out << p.alphabet.format(rel.lhs) << " = " << p.alphabet.format(rel.rhs);
    if (!rel.tag.empty()) {
      out << "  #" << rel.tag;
    }
    out << '\n';
  }
  return out.str();
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("alphabet:", 0) != 0) {
    throw UsageError("presentation file must start with an 'alphabet:' line");
  }
  std::istringstream head(line.substr(9));
  std::vector<std::string> names;
  for (std::string tok; head >> tok;) {
    names.push_back(tok);
  }
  Presentation p;
  p.alphabet = Alphabet::custom(names);
  // Re-map onto the global x/h coding when the names follow it; keeps parsed
  // words comparable with built presentations.
  bool xh = true;
  int max_x = 0;
  bool has_h = false;
  for (const auto& nm : names) {
    if (nm == "h") {
      has_h = true;
    } else if (nm.size() > 1 && nm[0] == 'x') {
      max_x = std::max(max_x, std::atoi(nm.c_str() + 1));
    } else {
      xh = false;
    }
  }
  if (xh && max_x >= 3) {
    p.n = max_x;
    std::vector<Letter> letters;
    for (const auto& nm : names) {
      letters.push_back(nm == "h" ? letter_h(max_x)
                                  : letter_x(std::atoi(nm.c_str() + 1)));
    }
    p.alphabet = Alphabet::xh_subset(max_x, std::move(letters));
  }
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::string tag;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      tag = line.substr(hash + 1);
      line = line.substr(0, hash);
    }
    auto eq = line.find(" = ");
    if (eq == std::string::npos) {
      throw UsageError("relation line lacks ' = ': " + line);
    }
    Relation rel;
    rel.lhs = p.alphabet.parse(line.substr(0, eq));
    rel.rhs = p.alphabet.parse(line.substr(eq + 3));
    while (!tag.empty() && tag.back() == ' ') {
      tag.pop_back();
    }
    rel.tag = tag;
    p.relations.push_back(std::move(rel));
  }
  return p;
}

}  // namespace isomon
