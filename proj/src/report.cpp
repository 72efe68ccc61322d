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

#include "isomon/report.hpp"

#include <sstream>

#include "isomon/errors.hpp"
#include "isomon/util.hpp"

namespace isomon {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") {
    return CheckStatus::Pass;
  }
  if (s == "fail") {
    return CheckStatus::Fail;
  }
  if (s == "inconclusive") {
    return CheckStatus::Inconclusive;
  }
  throw UsageError("unknown check status '" + s + "'");
}

VerificationReport::VerificationReport() : tool_version(kToolVersion) {}

VerificationReport::VerificationReport(int n_, std::string kind_)
    : tool_version(kToolVersion), n(n_), kind(std::move(kind_)) {}

CheckResult& VerificationReport::add(std::string name, CheckStatus status,
                                     std::string witness, double timing_ms) {
  checks.push_back({std::move(name), status, std::move(witness), timing_ms});
  return checks.back();
}

CheckResult& VerificationReport::add(std::string name, bool pass, std::string witness,
                                     double timing_ms) {
  return add(std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail,
             std::move(witness), timing_ms);
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back({prefix + c.name, c.status, c.witness, c.timing_ms});
  }
}

CheckStatus VerificationReport::overall() const {
  CheckStatus r = CheckStatus::Pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) {
      return CheckStatus::Fail;
    }
    if (c.status == CheckStatus::Inconclusive) {
      r = CheckStatus::Inconclusive;
    }
  }
  return r;
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t k = 0;
  for (const auto& c : checks) {
    if (c.status == s) {
      ++k;
    }
  }
  return k;
}

int VerificationReport::exit_code() const {
  switch (overall()) {
    case CheckStatus::Pass:
      return 0;
    case CheckStatus::Fail:
      return 1;
    case CheckStatus::Inconclusive:
      return 2;
  }
  return 1;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["tool_version"] = tool_version;
  j["n"] = n;
  j["kind"] = kind;
  j["limits"] = {{"max_word_length", limits.max_word_length},
                 {"max_states", limits.max_states},
                 {"max_depth", limits.max_depth}};
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.witness.empty()) {
      e["witness"] = c.witness;
    }
    e["timing_ms"] = c.timing_ms;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.n = j.at("n").get<int>();
  r.kind = j.at("kind").get<std::string>();
  const auto& lim = j.at("limits");
  r.limits.max_word_length = lim.at("max_word_length").get<int>();
  r.limits.max_states = lim.at("max_states").get<std::size_t>();
  r.limits.max_depth = lim.at("max_depth").get<int>();
  for (const auto& e : j.at("checks")) {
    CheckResult c;
    c.name = e.at("name").get<std::string>();
    c.status = check_status_from_string(e.at("status").get<std::string>());
    if (e.contains("witness")) {
      c.witness = e.at("witness").get<std::string>();
    }
    c.timing_ms = e.at("timing_ms").get<double>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "report " << kind << " (n=" << n << ", tool " << tool_version << ")\n";
  for (const auto& c : checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.witness.empty()) {
      out << "  -- " << c.witness;
    }
    out << "\n";
  }
  out << "overall: " << to_string(overall()) << " (" << checks.size() << " checks, "
      << count(CheckStatus::Fail) << " failed, " << count(CheckStatus::Inconclusive)
      << " inconclusive)\n";
  return out.str();
}

}  // namespace isomon
