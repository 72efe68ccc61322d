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

#include <functional>

#include "isomon/errors.hpp"
#include "isomon/families.hpp"
#include "isomon/util.hpp"
#include "oracles.hpp"

using namespace isomon;

TEST_SUITE("families") {

TEST_CASE("generators") {
  CHECK(gen_x(5, 2) ==
        PartialInjection::make(5, {{1, 1}, {2, 2}, {4, 4}, {5, 5}}));  // omits 3 = n-i
  CHECK(gen_x(5, 4) == PartialInjection::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
  CHECK(gen_x(5, 5) == PartialInjection::make(5, {{2, 1}, {3, 2}, {4, 3}, {5, 4}}));
  CHECK(gen_h(5) == PartialInjection::make(5, {{1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}}));
  CHECK_THROWS_AS(gen_x(5, 6), IndexOutOfRangeError);
  CHECK_THROWS_AS(gen_x(5, 0), IndexOutOfRangeError);

  for (int n = 3; n <= 8; ++n) {
    CHECK(compose(gen_h(n), gen_h(n)) == PartialInjection::identity(n));
    CHECK(gen_h(n).classify().isometry);
  }
}

TEST_CASE("conjugation identities") {
  for (int n = 3; n <= 8; ++n) {
    auto h = gen_h(n);
    CHECK(compose(h, compose(gen_x(n, n), h)) == gen_x(n, n - 1));
    for (int i = 1; i <= n - 2; ++i) {
      CHECK(compose(h, compose(gen_x(n, i), h)) == gen_x(n, n - i - 1));
    }
  }
}

TEST_CASE("generating sets") {
  auto c5 = generating_set(FamilyKind::C, 5);
  REQUIRE(c5.elements.size() == 4);
  CHECK(c5.elements[0].first == "h");
  CHECK(c5.elements[1].first == "x5");
  CHECK(c5.elements[2].first == "x1");
  CHECK(c5.elements[3].first == "x2");

  CHECK(generating_set(FamilyKind::A, 4).elements.size() == 4);
  CHECK(generating_set(FamilyKind::B, 3).elements.size() == 4);
  for (int n = 3; n <= 9; ++n) {
    CHECK(static_cast<int>(generating_set(FamilyKind::C, n).elements.size()) ==
          (n + 3) / 2);
  }
}

TEST_CASE("cardinality formulas") {
  auto r4 = cardinality_formulas(4);
  CHECK(r4.odp == 38);
  CHECK(r4.dp == 59);
  CHECK(r4.odp_plus == 27);
  CHECK(r4.idempotents == 16);
  CHECK(r4.rank_le_one == 17);

  auto r3 = cardinality_formulas(3);
  CHECK(r3.odp == 16);
  CHECK(r3.dp == 22);

  for (int n = 3; n <= 10; ++n) {
    auto r = cardinality_formulas(n);
    CHECK(r.odp_plus + r.odp_minus - r.idempotents == r.odp);
  }
}

TEST_CASE("summation identities") {
  for (int n = 1; n <= 30; ++n) {
    long long lhs = 1, rhs = 1;
    for (int k = 1; k <= n; ++k) {
      lhs += static_cast<long long>(k) * ipow2(n - k);
      rhs += static_cast<long long>(n - k + 1) * ipow2(k - 1);
    }
    CHECK(lhs == ipow2(n + 1) - (n + 1));
    CHECK(rhs == ipow2(n + 1) - (n + 1));
  }
}

TEST_CASE("closure sizes match the formulas") {
  for (int n = 3; n <= 8; ++n) {
    auto formulas = cardinality_formulas(n);
    MonoidSet odp = closure(generating_set(FamilyKind::A, n));
    MonoidSet dp = closure(generating_set(FamilyKind::B, n));
    CHECK(static_cast<long long>(odp.size()) == formulas.odp);
    CHECK(static_cast<long long>(dp.size()) == formulas.dp);
    CHECK(closure(generating_set(FamilyKind::C, n)).same_elements(dp));
    CHECK(odp.contains(PartialInjection::identity(n)));
  }
}

TEST_CASE("closure agrees with brute-force enumeration") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(closure(generating_set(FamilyKind::A, n)).elements == oracle::brute_odp(n));
    CHECK(closure(generating_set(FamilyKind::B, n)).elements == oracle::brute_dp(n));
  }
}

TEST_CASE("closure elements of A are order-preserving isometries") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& a : closure(generating_set(FamilyKind::A, n)).elements) {
      auto c = a.classify();
      CHECK(c.isometry);
      CHECK(c.order_preserving);
    }
  }
}

TEST_CASE("closure budget") {
  CHECK_THROWS_AS(closure(generating_set(FamilyKind::B, 6), 100), LimitExceededError);
}

TEST_CASE("domain census") {
  auto c = domain_census(9, {3, 5, 6});
  CHECK(c.coextensive == 3);
  CHECK(c.extensive == 4);
  CHECK(c.total == 6);
  REQUIRE(c.elements.size() == 6);
  CHECK(c.elements.front() == PartialInjection::make(9, {{3, 1}, {5, 3}, {6, 4}}));

  for (int n = 3; n <= 6; ++n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) {
      all.push_back(i);
    }
    auto full = domain_census(n, all);
    CHECK(full.coextensive == 1);
    CHECK(full.extensive == 1);
    CHECK(full.total == 1);
  }

  auto c2 = domain_census(4, {2});
  CHECK(c2.coextensive == 2);
  CHECK(c2.extensive == 3);
  CHECK(c2.total == 4);

  CHECK_THROWS_AS(domain_census(4, {}), EmptyDomainSetError);
}

TEST_CASE("census totals sum to the monoid size") {
  for (int n = 3; n <= 7; ++n) {
    long long total = 1;  // the empty map
    std::vector<int> subset;
    std::function<void(int)> visit = [&](int next) {
      if (!subset.empty()) {
        total += domain_census(n, subset).total;
      }
      for (int v = next; v <= n; ++v) {
        subset.push_back(v);
        visit(v + 1);
        subset.pop_back();
      }
    };
    visit(1);
    CHECK(total == cardinality_formulas(n).odp);
  }
}

TEST_CASE("decomposition") {
  for (int n = 3; n <= 7; ++n) {
    auto report = verify_decomposition(n);
    CHECK(report.all_passed());
  }
  // intersection sizes quoted at n=3, 4
  auto r3 = verify_decomposition(3);
  for (const auto& c : r3.checks) {
    if (c.name == "intersection.size") {
      CHECK(c.witness.find("10") != std::string::npos);
    }
  }
  auto r4 = verify_decomposition(4);
  for (const auto& c : r4.checks) {
    if (c.name == "intersection.size") {
      CHECK(c.witness.find("17") != std::string::npos);
    }
  }
}

TEST_CASE("minimal generating sets") {
  for (int n = 3; n <= 5; ++n) {
    MonoidSet odp = closure(generating_set(FamilyKind::A, n));
    CHECK(minimal_generating_check(generating_set(FamilyKind::A, n), odp).all_passed());
  }
  MonoidSet dp5 = closure(generating_set(FamilyKind::B, 5));
  auto c5 = generating_set(FamilyKind::C, 5);
  REQUIRE(c5.elements.size() == 4);
  CHECK(minimal_generating_check(c5, dp5).all_passed());

  // the identity alone generates only itself
  GeneratorFamily trivial{FamilyKind::A, 3, {{"id", PartialInjection::identity(3)}}};
  MonoidSet odp3 = closure(generating_set(FamilyKind::A, 3));
  auto report = minimal_generating_check(trivial, odp3);
  CHECK_FALSE(report.all_passed());
}

TEST_CASE("closure is closed") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(is_composition_closed(closure(generating_set(FamilyKind::B, n))));
  }
}

}  // TEST_SUITE
