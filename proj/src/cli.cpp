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

#include "isomon/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isomon/errors.hpp"
#include "isomon/families.hpp"
#include "isomon/forms.hpp"
#include "isomon/kb.hpp"
#include "isomon/presentation.hpp"
#include "isomon/rewrite.hpp"
#include "isomon/util.hpp"
#include "isomon/verifier.hpp"

namespace isomon {

namespace {

struct GlobalOpts {
  SearchLimits limits;
  int jobs = 1;
};

void check_n(int n) {
  if (n < 3) {
    throw UsageError("--n must be at least 3");
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = std::atoi(text.c_str());
    return {n, n};
  }
  int lo = std::atoi(text.substr(0, dots).c_str());
  int hi = std::atoi(text.substr(dots + 2).c_str());
  return {lo, hi};
}

PresKind parse_kind(const std::string& s) {
  auto k = pres_kind_from_string(s);
  if (!k) {
    throw UsageError("unknown presentation kind '" + s + "' (expected R, Rbar, U or V)");
  }
  return *k;
}

FamilyKind assignment_family(PresKind kind) {
  switch (kind) {
    case PresKind::R:
      return FamilyKind::A;
    case PresKind::V:
      return FamilyKind::C;
    default:
      return FamilyKind::B;
  }
}

void write_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) {
    throw IoFailureError("cannot open '" + path + "' for writing");
  }
  f << j.dump(2) << "\n";
}

int emit_report(const VerificationReport& report, const std::string& json_path,
                std::ostream& out) {
  out << report.to_text();
  if (!json_path.empty()) {
    write_json(report.to_json(), json_path, out);
  }
  return report.exit_code();
}

int cmd_enumerate(const std::string& family, int n, const std::string& out_path,
                  std::ostream& out) {
  check_n(n);
  FamilyKind kind;
  if (family == "odp") {
    kind = FamilyKind::A;
  } else if (family == "dp") {
    kind = FamilyKind::B;
  } else {
    throw UsageError("--family must be odp or dp");
  }
  MonoidSet s = closure(generating_set(kind, n));
  std::ostringstream lines;
  for (const auto& e : s.elements) {
    lines << e.to_text() << "\n";
  }
  if (out_path.empty()) {
    out << lines.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      throw IoFailureError("cannot open '" + out_path + "' for writing");
    }
    f << lines.str();
  }
  return 0;
}

int cmd_census(int n, const std::string& domain_csv, std::ostream& out) {
  check_n(n);
  std::vector<int> domain;
  std::stringstream ss(domain_csv);
  for (std::string tok; std::getline(ss, tok, ',');) {
    domain.push_back(std::atoi(tok.c_str()));
  }
  DomainCensus census = domain_census(n, domain);
  nlohmann::json j;
  j["n"] = n;
  j["domain"] = domain;
  j["coextensive"] = census.coextensive;
  j["extensive"] = census.extensive;
  j["total"] = census.total;
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& e : census.elements) {
    elems.push_back(e.to_text());
  }
  j["elements"] = std::move(elems);
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify_relations(PresKind kind, int n, const std::string& json_path,
                         const std::string& out_path, int jobs, std::ostream& out) {
  check_n(n);
  Presentation p = build_presentation(kind, n);
  VerificationReport report = check_relations(p, standard_assignment(assignment_family(kind), n), jobs);
  report.add("relation_count.formula",
             static_cast<long long>(p.relations.size()) == relation_count_formula(kind, n),
             std::to_string(p.relations.size()));
  out << serialize_presentation(p);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      throw IoFailureError("cannot open '" + out_path + "' for writing");
    }
    f << serialize_presentation(p);
  }
  return emit_report(report, json_path, out);
}

int cmd_forms(int n, int stratum, bool check, const std::string& json_path,
              std::ostream& out) {
  check_n(n);
  FormsCatalog catalog = FormsCatalog::build(n);
  Alphabet a = Alphabet::family(FamilyKind::A, n);
  for (const auto& e : catalog.entries()) {
    if (stratum >= 0 && e.rank != stratum) {
      continue;
    }
    out << a.format(e.word) << "  [" << e.subset << "]\n";
  }
  VerificationReport report(n, "forms");
  if (check) {
    report = check_bijection(catalog);
    out << report.to_text();
  }
  if (!json_path.empty()) {
    write_json(report.to_json(), json_path, out);
  }
  return report.exit_code();
}

int cmd_derive(PresKind kind, int n, const std::string& from, const std::string& to,
               const GlobalOpts& opts, const std::string& json_path, std::ostream& out) {
  check_n(n);
  Presentation p = build_presentation(kind, n);
  Word a = p.alphabet.parse(from);
  Word b = p.alphabet.parse(to);
  std::vector<RewriteRule> rules = rules_of(p);
  DeriveResult r = derive(a, b, rules, opts.limits);
  if (r.status == SearchStatus::Found) {
    out << "derivation of length " << r.derivation->steps.size() << " ("
        << r.states << " states)\n";
    Word w = a;
    out << "  " << p.alphabet.format(w) << "\n";
    for (const auto& step : r.derivation->steps) {
      RewriteRule rr = rules[step.rule];
      rr.reversed = step.reversed;
      w = *apply_at(w, rr, step.pos);
      out << "  = " << p.alphabet.format(w) << "   [" << rules[step.rule].origin
          << (step.reversed ? " rev" : "") << " @" << step.pos << "]\n";
    }
    if (!json_path.empty()) {
      write_json(derivation_to_json(*r.derivation, rules, p.alphabet), json_path, out);
    }
    return 0;
  }
  out << (r.status == SearchStatus::LimitExceeded ? "limit exceeded" : "not found")
      << " after " << r.states << " states\n";
  return 2;
}

int cmd_kb(PresKind kind, int n, const std::string& precedence, const GlobalOpts& opts,
           std::ostream& out) {
  check_n(n);
  Presentation p = build_presentation(kind, n);
  ShortlexOrder order = precedence.empty() ? default_precedence(p.alphabet)
                                           : parse_precedence(p.alphabet, precedence);
  KbResult r = kb_complete(p, order, opts.limits);
  if (!r.completed) {
    out << "completion abandoned after " << r.pairs_processed << " pairs\n";
    return 2;
  }
  out << "completed: " << r.system->rules.size() << " rules (precedence "
      << order.describe(p.alphabet) << ")\n";
  for (const auto& rule : r.system->rules) {
    out << "  " << p.alphabet.format(rule.lhs) << " -> " << p.alphabet.format(rule.rhs)
        << "\n";
  }
  IrreducibleCount c = count_irreducible(*r.system);
  if (c.finite) {
    out << "irreducible words: " << c.count << "\n";
  } else {
    out << "irreducible words: infinite\n";
  }
  return 0;
}

int cmd_prove(PresKind kind, int n, const GlobalOpts& opts, const std::string& json_path,
              std::ostream& out) {
  check_n(n);
  if (kind != PresKind::R && kind != PresKind::Rbar) {
    throw UsageError("prove supports --kind R (ODP_n) and --kind Rbar (DP_n)");
  }
  GuessProveReport gp;
  if (kind == PresKind::R) {
    FormsCatalog catalog = FormsCatalog::build(n);
    std::vector<Word> words;
    for (const auto& e : catalog.entries()) {
      words.push_back(e.word);
    }
    gp = guess_and_prove(build_presentation(PresKind::R, n),
                         standard_assignment(FamilyKind::A, n),
                         closure(generating_set(FamilyKind::A, n)), words, opts.limits,
                         opts.jobs);
  } else {
    ExtensionResult ext = build_extension_presentation(paper_extension_spec(n));
    gp = guess_and_prove(ext.presentation, standard_assignment(FamilyKind::B, n),
                         closure(generating_set(FamilyKind::B, n)), ext.w_bar,
                         opts.limits, opts.jobs);
  }
  return emit_report(gp.report, json_path, out);
}

int cmd_extend(int n, const GlobalOpts&, const std::string& json_path,
               const std::string& out_path, std::ostream& out) {
  check_n(n);
  ExtensionSpec spec = paper_extension_spec(n);
  ExtensionResult ext = build_extension_presentation(spec);
  out << serialize_presentation(ext.presentation);
  out << "|W-bar| = " << ext.w_bar.size() << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      throw IoFailureError("cannot open '" + out_path + "' for writing");
    }
    f << serialize_presentation(ext.presentation);
  }
  return emit_report(ext.report, json_path, out);
}

int cmd_chain(int n, const GlobalOpts& opts, const std::string& json_path,
              std::ostream& out) {
  check_n(n);
  VerificationReport report = check_U_equivalences(n, opts.limits, opts.jobs);
  ChainResult chain = derive_V_from_U(n, opts.limits);
  report.append(chain.report, "chain.");
  return emit_report(report, json_path, out);
}

int cmd_report(const std::string& range, const GlobalOpts& opts,
               const std::string& json_path, std::ostream& out) {
  auto [lo, hi] = parse_range(range);
  check_n(lo);
  if (hi < lo) {
    throw UsageError("range must be lo..hi with lo <= hi");
  }
  VerificationReport report = full_report(lo, hi, opts.limits, opts.jobs);
  return emit_report(report, json_path, out);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for the partial-isometry monoids DP_n and ODP_n"};
  app.require_subcommand(1);

  GlobalOpts opts;
  if (const char* env = std::getenv("ISOMON_JOBS")) {
    opts.jobs = std::max(1, std::atoi(env));
  }
  app.add_option("--max-states", opts.limits.max_states,
                 "state budget for bounded searches");
  app.add_option("--max-depth", opts.limits.max_depth,
                 "depth budget for bounded searches");
  app.add_option("--max-word-length", opts.limits.max_word_length,
                 "hard word-length bound (default: input length + 4)");
  app.add_option("--jobs", opts.jobs, "parallel workers for independent checks");

  int n = 0;
  std::string family, domain_csv, kind_str, from, to, precedence;
  std::string json_path, out_path, range;
  int stratum = -1;
  bool check_bij = false;

  auto* enumerate = app.add_subcommand("enumerate", "list a monoid family by closure");
  enumerate->add_option("--family", family, "odp or dp")->required();
  enumerate->add_option("--n", n, "ground-set size")->required();
  enumerate->add_option("--out", out_path, "write elements to a file");

  auto* census = app.add_subcommand("census", "count elements with a fixed domain");
  census->add_option("--n", n, "ground-set size")->required();
  census->add_option("--domain", domain_csv, "comma-separated domain points")->required();

  auto* verify = app.add_subcommand("verify-relations", "evaluate a relation family");
  verify->add_option("--kind", kind_str, "R, Rbar, U or V")->required();
  verify->add_option("--n", n, "ground-set size")->required();
  verify->add_option("--json", json_path, "write the JSON report ('-' = stdout)");
  verify->add_option("--out", out_path, "write the presentation file");

  auto* forms = app.add_subcommand("forms", "print the normal-form catalog");
  forms->add_option("--n", n, "ground-set size")->required();
  forms->add_option("--stratum", stratum, "restrict to one rank");
  forms->add_flag("--check-bijection", check_bij, "verify the evaluation bijection");
  forms->add_option("--json", json_path, "write the JSON report ('-' = stdout)");

  auto* derive_cmd = app.add_subcommand("derive", "search for a derivation");
  derive_cmd->add_option("--kind", kind_str, "relation family")->required();
  derive_cmd->add_option("--n", n, "ground-set size")->required();
  derive_cmd->add_option("--from", from, "starting word")->required();
  derive_cmd->add_option("--to", to, "target word")->required();
  derive_cmd->add_option("--json", json_path, "write the derivation as JSON ('-' = stdout)");

  auto* kb = app.add_subcommand("kb", "Knuth-Bendix completion");
  kb->add_option("--kind", kind_str, "relation family (R or V for the oracle check)")
      ->required();
  kb->add_option("--n", n, "ground-set size")->required();
  kb->add_option("--precedence", precedence, "letter precedence, e.g. x1<x2<x3<h");

  auto* prove = app.add_subcommand("prove", "run the finite-presentation check");
  prove->add_option("--kind", kind_str, "R (ODP_n) or Rbar (DP_n)")->required();
  prove->add_option("--n", n, "ground-set size")->required();
  prove->add_option("--json", json_path, "write the JSON report ('-' = stdout)");

  auto* extend = app.add_subcommand("extend", "build the extension presentation");
  extend->add_option("--n", n, "ground-set size")->required();
  extend->add_option("--json", json_path, "write the JSON report ('-' = stdout)");
  extend->add_option("--out", out_path, "write the presentation file");

  auto* chain = app.add_subcommand("chain", "certify the U and V transformations");
  chain->add_option("--n", n, "ground-set size")->required();
  chain->add_option("--json", json_path, "write the JSON report ('-' = stdout)");

  auto* report = app.add_subcommand("report", "run the whole suite over a range of n");
  report->add_option("--n", range, "single n or a range like 3..6")->required();
  report->add_option("--json", json_path, "write the JSON report ('-' = stdout)");

  std::reverse(args.begin(), args.end());  // CLI11 consumes in reverse
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (*enumerate) {
      return cmd_enumerate(family, n, out_path, out);
    }
    if (*census) {
      return cmd_census(n, domain_csv, out);
    }
    if (*verify) {
      return cmd_verify_relations(parse_kind(kind_str), n, json_path, out_path, opts.jobs,
                                  out);
    }
    if (*forms) {
      return cmd_forms(n, stratum, check_bij, json_path, out);
    }
    if (*derive_cmd) {
      return cmd_derive(parse_kind(kind_str), n, from, to, opts, json_path, out);
    }
    if (*kb) {
      return cmd_kb(parse_kind(kind_str), n, precedence, opts, out);
    }
    if (*prove) {
      return cmd_prove(parse_kind(kind_str), n, opts, json_path, out);
    }
    if (*extend) {
      return cmd_extend(n, opts, json_path, out_path, out);
    }
    if (*chain) {
      return cmd_chain(n, opts, json_path, out);
    }
    if (*report) {
      return cmd_report(range, opts, json_path, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 3;
}

}  // namespace isomon
