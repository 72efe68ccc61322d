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

#include <json.hpp>
#include <sstream>

#include "isomon/cli.hpp"
#include "isomon/report.hpp"

using namespace isomon;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t k = 0;
  for (char c : s) {
    if (c == '\n') {
      ++k;
    }
  }
  return k;
}

nlohmann::json strip_timings(nlohmann::json j) {
  for (auto& c : j["checks"]) {
    c["timing_ms"] = 0.0;
  }
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate prints one element per line") {
  auto r = run({"enumerate", "--family", "dp", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 22);
  auto r2 = run({"enumerate", "--family", "odp", "--n", "4"});
  CHECK(count_lines(r2.out) == 38);
}

TEST_CASE("census prints the paper example as JSON") {
  auto r = run({"census", "--n", "9", "--domain", "3,5,6"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["coextensive"] == 3);
  CHECK(j["extensive"] == 4);
  CHECK(j["total"] == 6);
  CHECK(j["elements"].size() == 6);
  CHECK(j["elements"][0] == "n=9; 3->1 5->3 6->4");
}

TEST_CASE("verify-relations") {
  auto r = run({"verify-relations", "--kind", "R", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alphabet: x1 x2 x3 x4") != std::string::npos);
  CHECK(r.out.find("#R9") != std::string::npos);
}

TEST_CASE("derive prints a step list") {
  auto r = run({"derive", "--kind", "R", "--n", "4", "--from", "x3 x4 x3", "--to", "x3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("R9") != std::string::npos);
  auto starved = run({"--max-states", "1", "derive", "--kind", "R", "--n", "4", "--from",
                      "x4 x4 x4 x4 x4", "--to", "x4 x4 x4 x4"});
  CHECK(starved.code == 2);
}

TEST_CASE("prove exit codes") {
  auto ok = run({"prove", "--kind", "R", "--n", "3"});
  CHECK(ok.code == 0);
  auto starved = run({"--max-states", "1", "prove", "--kind", "R", "--n", "3"});
  CHECK(starved.code == 2);
}

TEST_CASE("usage errors exit with 3") {
  CHECK(run({"prove", "--kind", "R", "--n", "2"}).code == 3);
  CHECK(run({"prove", "--kind", "Q", "--n", "3"}).code == 3);
  CHECK(run({"enumerate", "--family", "dp", "--n", "3", "--frobnicate"}).code == 3);
  CHECK(run({}).code == 3);
}

TEST_CASE("help lists every verb") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  for (const char* verb : {"enumerate", "census", "verify-relations", "forms", "derive",
                           "kb", "prove", "extend", "chain", "report"}) {
    CHECK(r.out.find(verb) != std::string::npos);
  }
}

TEST_CASE("JSON reports are deterministic modulo timings") {
  auto a = run({"verify-relations", "--kind", "V", "--n", "4", "--json", "-"});
  auto b = run({"verify-relations", "--kind", "V", "--n", "4", "--json", "-"});
  REQUIRE(a.code == 0);
  auto ja = nlohmann::json::parse(a.out.substr(a.out.find('{')));
  auto jb = nlohmann::json::parse(b.out.substr(b.out.find('{')));
  CHECK(strip_timings(ja).dump() == strip_timings(jb).dump());
}

TEST_CASE("report JSON round-trips") {
  auto r = run({"forms", "--n", "4", "--check-bijection", "--json", "-"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  VerificationReport rep = VerificationReport::from_json(j);
  CHECK(rep.to_json() == j);
}

TEST_CASE("chain and extend run at n=3") {
  CHECK(run({"extend", "--n", "3"}).code == 0);
  CHECK(run({"chain", "--n", "3"}).code == 0);
}

}  // TEST_SUITE
