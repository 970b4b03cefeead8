// Copyright 2026 The aucteq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aucteq/auction.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "aucteq/errors.hpp"

namespace aucteq {
namespace {

TEST_CASE("instance validation") {
  CHECK_NOTHROW(AuctionInstance({2.0, 1.0}));
  CHECK_NOTHROW(AuctionInstance({1.0, 1.0, 0.5}));
  CHECK_THROWS_AS(AuctionInstance({1.0, 2.0}), InvalidInput);
  CHECK_THROWS_AS(AuctionInstance({1.0}), InvalidInput);
  CHECK_THROWS_AS(AuctionInstance({1.0, -0.5}), InvalidInput);
  CHECK_THROWS_AS(AuctionInstance({1.0, 1.0}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(AuctionInstance({1.0, 1.0}, {0, 2}), InvalidInput);
}

TEST_CASE("outcome uses tie priority") {
  const AuctionInstance plain({2.0, 1.0});
  const Outcome tie = outcome(plain, {0.5, 0.5});
  CHECK(tie.winner == 0);
  CHECK(tie.price == 0.5);

  const AuctionInstance reversed({2.0, 1.0}, {1, 0});
  CHECK(outcome(reversed, {0.5, 0.5}).winner == 1);
  CHECK(outcome(reversed, {0.7, 0.5}).winner == 0);
  CHECK(reversed.tie_rank(1) == 0);

  CHECK_THROWS_AS(outcome(plain, {0.5}), InvalidInput);
  CHECK_THROWS_AS(outcome(plain, {0.5, -0.1}), InvalidInput);
}

TEST_CASE("finite equilibrium invariants") {
  Atom a{0.5, {1.0, 0.4}, {{0, 1.0}}};
  Atom b{0.5, {0.3, 0.7}, {{1, 1.0}}};
  CHECK_NOTHROW(FiniteEquilibrium({a, b}));

  Atom short_mass = a;
  short_mass.p = 0.25;
  CHECK_THROWS_AS(FiniteEquilibrium({short_mass, b}), InvalidInput);

  Atom wrong_winner{0.5, {1.0, 0.4}, {{1, 1.0}}};  // player 1 is not argmax
  CHECK_THROWS_AS(FiniteEquilibrium({wrong_winner, b}), InvalidInput);

  Atom dup = a;
  dup.p = 0.25;
  Atom half = a;
  half.p = 0.25;
  CHECK_THROWS_AS(FiniteEquilibrium({half, dup, b}), InvalidInput);

  Atom split{0.5, {0.6, 0.6}, {{0, 0.5}, {1, 0.3}}};  // shares sum 0.8
  CHECK_THROWS_AS(FiniteEquilibrium({split, b}), InvalidInput);
}

TEST_CASE("summarize on a two-atom distribution") {
  const AuctionInstance inst({2.0, 1.0});
  const FiniteEquilibrium eq({{0.5, {1.0, 0.4}, {{0, 1.0}}},
                              {0.5, {0.3, 0.7}, {{1, 1.0}}}});
  const OutcomeSummary s = summarize(inst, eq);
  CHECK(s.welfare == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(s.revenue == doctest::Approx(0.85).epsilon(1e-14));
  CHECK(s.win_prob[0] == doctest::Approx(0.5));
  CHECK(s.win_prob[1] == doctest::Approx(0.5));
  CHECK(s.expected_payment[0] == doctest::Approx(0.5));
  CHECK(s.expected_payment[1] == doctest::Approx(0.35));
  CHECK(s.utility[0] == doctest::Approx(0.5));
  CHECK(s.utility[1] == doctest::Approx(0.15));
}

TEST_CASE("perturb_to_strict removes ties and keeps welfare") {
  const AuctionInstance inst({1.0, 1.0});
  const FiniteEquilibrium tied({{1.0, {0.5, 0.5}, {{0, 0.6}, {1, 0.4}}}});
  const double eps = 1e-6;
  const FiniteEquilibrium strict = perturb_to_strict(tied, eps);

  REQUIRE(strict.atoms().size() == 2);
  for (const Atom& a : strict.atoms()) {
    int at_max = 0;
    for (double bid : a.bids) at_max += bid == a.max_bid() ? 1 : 0;
    CHECK(at_max == 1);
    REQUIRE(a.winner_shares.size() == 1);
    CHECK(a.winner_shares[0].second == 1.0);
  }
  const OutcomeSummary before = summarize(inst, tied);
  const OutcomeSummary after = summarize(inst, strict);
  CHECK(after.welfare == doctest::Approx(before.welfare).epsilon(1e-14));
  CHECK(std::abs(after.revenue - before.revenue) <= eps + 1e-15);
  // Shares become winning probabilities.
  CHECK(after.win_prob[0] == doctest::Approx(0.6));
  CHECK(after.win_prob[1] == doctest::Approx(0.4));
}

TEST_CASE("merge_duplicate_atoms pools mass and shares") {
  std::vector<Atom> atoms = {{0.25, {0.5, 0.2}, {{0, 1.0}}},
                             {0.25, {0.5, 0.2}, {{0, 1.0}}},
                             {0.5, {0.1, 0.6}, {{1, 1.0}}}};
  const std::vector<Atom> merged = merge_duplicate_atoms(atoms);
  REQUIRE(merged.size() == 2);
  double total = 0.0;
  double pooled = 0.0;
  for (const Atom& a : merged) {
    total += a.p;
    if (a.bids == BidProfile{0.5, 0.2}) pooled = a.p;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pooled == doctest::Approx(0.5));
}

}  // namespace
}  // namespace aucteq
