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

#include <set>

#include "isomon/errors.hpp"
#include "isomon/families.hpp"
#include "isomon/partial_injection.hpp"
#include "oracles.hpp"

using namespace isomon;

TEST_SUITE("partial_injection") {

TEST_CASE("make canonicalizes and validates") {
  auto a = PartialInjection::make(9, {{5, 3}, {3, 1}, {6, 4}});
  CHECK(a.pairs() == std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {6, 4}});
  CHECK(a.rank() == 3);
  CHECK(a.to_text() == "n=9; 3->1 5->3 6->4");

  auto empty = PartialInjection::make(4, {});
  CHECK(empty.rank() == 0);
  CHECK(empty.to_text() == "n=4; empty");

  CHECK_THROWS_AS(PartialInjection::make(3, {{1, 2}, {2, 2}}), NotInjectiveError);
  CHECK_THROWS_AS(PartialInjection::make(3, {{1, 2}, {1, 3}}), NotInjectiveError);
  CHECK_THROWS_AS(PartialInjection::make(3, {{0, 2}}), OutOfRangeError);
  CHECK_THROWS_AS(PartialInjection::make(3, {{1, 4}}), OutOfRangeError);
}

TEST_CASE("compose acts left to right") {
  // x_{n-1} then x_n at n=5: the +1 shift followed by the -1 shift fixes
  // {1..4} pointwise.
  auto x4 = gen_x(5, 4);
  auto x5 = gen_x(5, 5);
  auto id4 = PartialInjection::make(5, {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  CHECK(compose(x4, x5) == id4);

  // 1h = 5 under the reflection, so {3->1} h = {3->5}.
  auto a = PartialInjection::make(5, {{3, 1}});
  CHECK(compose(a, gen_h(5)) == PartialInjection::make(5, {{3, 5}}));

  auto mism = PartialInjection::identity(4);
  CHECK_THROWS_AS(compose(a, mism), MismatchedGroundSetError);

  auto rng = oracle::test_rng();
  for (int trial = 0; trial < 20; ++trial) {
    auto r = oracle::random_partial_injection(5, rng);
    CHECK(compose(r, PartialInjection::identity(5)) == r);
    CHECK(compose(PartialInjection::identity(5), r) == r);
  }
}

TEST_CASE("associativity over random triples") {
  auto rng = oracle::test_rng();
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = oracle::random_partial_injection(n, rng);
      auto b = oracle::random_partial_injection(n, rng);
      auto c = oracle::random_partial_injection(n, rng);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("inverse") {
  auto a = PartialInjection::make(9, {{3, 1}, {5, 3}, {6, 4}});
  CHECK(a.inverse() == PartialInjection::make(9, {{1, 3}, {3, 5}, {4, 6}}));
  CHECK(PartialInjection::empty_map(7).inverse() == PartialInjection::empty_map(7));
  for (int n = 3; n <= 6; ++n) {
    CHECK(gen_h(n).inverse() == gen_h(n));
  }
  // Anti-homomorphism, and a a^{-1} is the partial identity on the domain.
  auto rng = oracle::test_rng();
  for (int trial = 0; trial < 200; ++trial) {
    auto a1 = oracle::random_partial_injection(5, rng);
    auto b1 = oracle::random_partial_injection(5, rng);
    CHECK(compose(a1, b1).inverse() == compose(b1.inverse(), a1.inverse()));
    auto idem = compose(a1, a1.inverse());
    CHECK(idem.is_partial_identity());
    CHECK(idem.rank() == a1.rank());
  }
}

TEST_CASE("rank") {
  CHECK(PartialInjection::identity(5).rank() == 5);
  CHECK(PartialInjection::empty_map(5).rank() == 0);
  CHECK(PartialInjection::make(9, {{3, 1}, {5, 3}, {6, 4}}).rank() == 3);
}

TEST_CASE("classify") {
  auto h = gen_h(5);
  auto ch = h.classify();
  CHECK(ch.order_reversing);
  CHECK(ch.isometry);
  CHECK_FALSE(ch.order_preserving);
  CHECK_FALSE(ch.extensive);
  CHECK_FALSE(ch.coextensive);
  CHECK_FALSE(ch.shift.has_value());

  auto ce = PartialInjection::empty_map(6).classify();
  CHECK(ce.order_preserving);
  CHECK(ce.order_reversing);
  CHECK(ce.isometry);
  CHECK(ce.extensive);
  CHECK(ce.coextensive);
  CHECK_FALSE(ce.shift.has_value());

  auto a = PartialInjection::make(9, {{3, 1}, {5, 3}, {6, 4}}).classify();
  CHECK(a.order_preserving);
  CHECK(a.isometry);
  CHECK(a.coextensive);
  CHECK_FALSE(a.extensive);
  CHECK(a.shift == -2);

  // rank <= 1 satisfies every pairwise flag vacuously
  auto r1 = PartialInjection::rank_one(4, 2, 3).classify();
  CHECK(r1.order_preserving);
  CHECK(r1.order_reversing);
  CHECK(r1.isometry);
  CHECK(r1.shift == 1);
}

TEST_CASE("isometry implies order-preserving or order-reversing") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& a : oracle::brute_dp(n)) {
      auto c = a.classify();
      CHECK(c.isometry);
      CHECK((c.order_preserving || c.order_reversing));
    }
  }
}

TEST_CASE("order-preserving isometry iff constant shift") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& a : oracle::brute_odp(n)) {
      auto c = a.classify();
      REQUIRE(c.order_preserving);
      REQUIRE(c.isometry);
      if (a.rank() >= 1) {
        REQUIRE(c.shift.has_value());
        for (const auto& [d, i] : a.pairs()) {
          CHECK(i - d == *c.shift);
        }
      }
    }
    // and conversely, every constant-shift map on its domain classifies as an
    // order-preserving isometry
    for (const auto& a : oracle::brute_dp(n)) {
      bool constant_shift = true;
      for (const auto& [d, i] : a.pairs()) {
        if (i - d != a.pairs().front().second - a.pairs().front().first) {
          constant_shift = false;
        }
      }
      if (a.rank() >= 1 && constant_shift) {
        auto c = a.classify();
        CHECK(c.order_preserving);
        CHECK(c.isometry);
      }
    }
  }
}

TEST_CASE("h flips order on rank >= 2") {
  for (int n = 3; n <= 6; ++n) {
    auto h = gen_h(n);
    for (const auto& a : oracle::brute_dp(n)) {
      if (a.rank() < 2) {
        continue;
      }
      CHECK(compose(h, a).classify().order_preserving == a.classify().order_reversing);
    }
  }
}

TEST_CASE("canonical keys") {
  auto a = PartialInjection::make(9, {{6, 4}, {3, 1}, {5, 3}});
  auto b = PartialInjection::make(9, {{3, 1}, {5, 3}, {6, 4}});
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(PartialInjection::identity(4).canonical_key() !=
        PartialInjection::identity(5).canonical_key());

  std::set<std::string> keys;
  for (const auto& e : closure(generating_set(FamilyKind::B, 3)).elements) {
    keys.insert(e.canonical_key());
  }
  CHECK(keys.size() == 22);
}

}  // TEST_SUITE
