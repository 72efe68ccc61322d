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

#ifndef ISOMON_REPORT_HPP
#define ISOMON_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "isomon/limits.hpp"

namespace isomon {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // optional free-form evidence; empty = omitted in JSON
  double timing_ms = 0.0;
};

/// Machine-checkable certificate for a theorem-level check: a named list of
/// conditions with pass/fail/inconclusive status, plus the limits in force.
struct VerificationReport {
  std::string tool_version;
  int n = 0;
  std::string kind;
  SearchLimits limits;
  std::vector<CheckResult> checks;

  VerificationReport();
  VerificationReport(int n, std::string kind);

  CheckResult& add(std::string name, CheckStatus status, std::string witness = "",
                   double timing_ms = 0.0);
  CheckResult& add(std::string name, bool pass, std::string witness = "",
                   double timing_ms = 0.0);
  void append(const VerificationReport& other, const std::string& prefix = "");

  /// Fail dominates Inconclusive dominates Pass.
  CheckStatus overall() const;
  bool all_passed() const { return overall() == CheckStatus::Pass; }
  std::size_t count(CheckStatus s) const;

  /// Exit-code convention: pass 0, fail 1, inconclusive 2.
  int exit_code() const;

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string to_text() const;
};

}  // namespace isomon

#endif  // ISOMON_REPORT_HPP
