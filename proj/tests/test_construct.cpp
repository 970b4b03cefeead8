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

#include "aucteq/construct.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "aucteq/auction.hpp"
#include "aucteq/bounds.hpp"
#include "aucteq/errors.hpp"
#include "aucteq/piecewise_cdf.hpp"
#include "aucteq/verify.hpp"

namespace aucteq {
namespace {

constexpr double kAlphaStar = 0.274321621580725;
constexpr double kBetaStar = 0.135295929072253;
constexpr double kWStar = 0.813559376859257;
constexpr double kQStar = 0.320357534829319;
constexpr double kRevenueStar = 0.403941826206278;

TEST_CASE("worst welfare construction hits all frozen targets at the optimum") {
  const ContinuousEquilibrium eq = construct_worst_welfare(kAlphaStar);
  CHECK(eq.instance().value(0) == 1.0);
  CHECK(eq.instance().value(1) == doctest::Approx(1.0 - kAlphaStar));
  CHECK(eq.price_cdf().top() ==
        doctest::Approx(1.0 - kAlphaStar).epsilon(1e-14));

  const OutcomeSummary s = summarize(eq);
  CHECK(s.welfare == doctest::Approx(kWStar).epsilon(1e-9));
  CHECK(s.revenue == doctest::Approx(kRevenueStar).epsilon(1e-9));
  CHECK(s.utility[0] == doctest::Approx(kAlphaStar).epsilon(1e-9));
  CHECK(s.utility[1] == doctest::Approx(kBetaStar).epsilon(1e-9));
  CHECK(s.win_prob[0] == doctest::Approx(kQStar).epsilon(1e-9));

  // The price distribution is the deviation-indifference envelope: neither
  // player's best continuum deviation beats the assigned utility.
  for (int p = 0; p < 2; ++p) {
    const double sup =
        eq.price_cdf().sup_deviation_utility(eq.instance().value(p));
    CHECK(s.utility[p] >= sup - 1e-9);
    CHECK(s.utility[p] <= sup + 1e-9);
  }
}

TEST_CASE("worst welfare construction tracks the curve across the window") {
  CHECK(summarize(construct_worst_welfare(0.27)).welfare ==
        doctest::Approx(0.813575237666982).epsilon(1e-9));
  CHECK(summarize(construct_worst_welfare(0.28)).welfare ==
        doctest::Approx(0.813586220126308).epsilon(1e-9));
}

TEST_CASE("worst welfare construction rejects unreachable targets") {
  CHECK_THROWS_AS(construct_worst_welfare(0.6), ConstructionError);
}

TEST_CASE("single segment construction is tight exactly at its stationary point") {
  const double a0 = 0.203187869979980;
  const ContinuousEquilibrium eq = construct_single_segment_worst_welfare(a0);
  const OutcomeSummary s = summarize(eq);
  CHECK(s.welfare == doctest::Approx(0.838097440527021).epsilon(1e-12));
  CHECK(s.utility[0] == doctest::Approx(a0).epsilon(1e-12));
  for (int p = 0; p < 2; ++p) {
    const double sup =
        eq.price_cdf().sup_deviation_utility(eq.instance().value(p));
    CHECK(std::abs(s.utility[p] - sup) <= 1e-9);
  }
}

TEST_CASE("single segment construction below the root is not an equilibrium") {
  const ContinuousEquilibrium eq = construct_single_segment_worst_welfare(0.25);
  const OutcomeSummary s = summarize(eq);
  CHECK(s.utility[1] == doctest::Approx(0.159073590279973).epsilon(1e-12));
  const double sup = eq.price_cdf().sup_deviation_utility(0.75);
  CHECK(sup == doctest::Approx(0.1875).epsilon(1e-12));
  CHECK(s.utility[1] < sup);  // the low-value player wants to deviate
}

TEST_CASE("symmetric construction revenue and utilities") {
  const double inv_e = std::exp(-1.0);

  const OutcomeSummary two = summarize(construct_symmetric_worst_revenue(2, 1.0));
  CHECK(two.revenue == doctest::Approx(1.0 - 2.0 * inv_e).epsilon(1e-12));
  CHECK(two.welfare == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two.utility[0] == doctest::Approx(inv_e).epsilon(1e-12));
  CHECK(two.utility[1] == doctest::Approx(inv_e).epsilon(1e-12));
  CHECK(two.win_prob[0] == doctest::Approx(0.5).epsilon(1e-12));

  const OutcomeSummary three =
      summarize(construct_symmetric_worst_revenue(3, 1.0));
  CHECK(three.revenue == doctest::Approx(0.593994150290162).epsilon(1e-12));
  CHECK(three.utility[2] == doctest::Approx(inv_e * inv_e).epsilon(1e-12));

  // The whole construction scales linearly in the common value.
  const OutcomeSummary scaled =
      summarize(construct_symmetric_worst_revenue(2, 2.0));
  CHECK(scaled.revenue == doctest::Approx(2.0 * two.revenue).epsilon(1e-12));
  CHECK(scaled.utility[0] == doctest::Approx(2.0 * inv_e).epsilon(1e-12));

  CHECK_THROWS_AS(construct_symmetric_worst_revenue(1, 1.0), InvalidInput);
}

TEST_CASE("six atom example summary values") {
  const AuctionEquilibrium eq = construct_table1(1e-4);
  CHECK(eq.distribution.atoms().size() == 6);
  const OutcomeSummary s = summarize(eq.instance, eq.distribution);
  CHECK(s.utility[0] == doctest::Approx(1.016).epsilon(1e-12));
  CHECK(s.utility[1] == doctest::Approx(0.037996).epsilon(1e-12));
  CHECK(s.welfare == doctest::Approx(1.96).epsilon(1e-12));
  CHECK(s.revenue == doctest::Approx(0.906004).epsilon(1e-12));

  CHECK_THROWS_AS(construct_table1(0.0), InvalidInput);
  CHECK_THROWS_AS(construct_table1(2e-3), InvalidInput);
}

TEST_CASE("pure equilibrium mixtures and their verification") {
  const AuctionEquilibrium eq =
      construct_pure_nash_mixture(2.0, 1.0, {{1.0, 0.5}, {1.5, 0.5}});
  const OutcomeSummary s = summarize(eq.instance, eq.distribution);
  CHECK(s.revenue == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(s.welfare == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.utility[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(s.utility[1] == 0.0);

  for (TiePolicy policy : {TiePolicy::kDeviatorWins, TiePolicy::kDeviatorLoses}) {
    CHECK(verify_cce(eq, 1e-9, policy).pass);
    CHECK(verify_ce(eq, 1e-9, policy).pass);
  }

  CHECK_THROWS_AS(construct_pure_nash_mixture(2.0, 1.0, {{0.5, 1.0}}),
                  InvalidInput);  // price below v2
  CHECK_THROWS_AS(construct_pure_nash_mixture(2.0, 1.0, {}), InvalidInput);
}

TEST_CASE("three to two player reduction preserves price and deviations") {
  const AuctionInstance inst({1.0, 0.8, 0.6});
  const FiniteEquilibrium eq({
      {0.3, {0.9, 0.2, 0.5}, {{0, 1.0}}},
      {0.4, {0.1, 0.7, 0.4}, {{1, 1.0}}},
      {0.3, {0.2, 0.3, 0.6}, {{2, 1.0}}},
  });
  const OutcomeSummary before = summarize(inst, eq);

  const AuctionEquilibrium red = reduce_to_two(inst, eq);
  CHECK(red.instance.num_players() == 2);
  REQUIRE(red.distribution.atoms().size() == 3);
  // merge_duplicate_atoms orders profiles lexicographically.
  CHECK(red.distribution.atoms()[0].bids == BidProfile{0.4, 0.7});
  CHECK(red.distribution.atoms()[1].bids == BidProfile{0.6, 0.6});
  CHECK(red.distribution.atoms()[2].bids == BidProfile{0.9, 0.5});
  CHECK(red.distribution.atoms()[1].share_of(0) == 1.0);

  const OutcomeSummary after = summarize(red.instance, red.distribution);
  CHECK(after.revenue == doctest::Approx(before.revenue).epsilon(1e-14));
  CHECK(after.revenue == doctest::Approx(0.73).epsilon(1e-12));
  CHECK(after.utility[0] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(after.utility[1] == doctest::Approx(0.04).epsilon(1e-12));
  CHECK(before.utility[0] == doctest::Approx(0.03).epsilon(1e-12));

  // Every deviation payoff is preserved bid for bid: each kept player faces
  // the same opponent-maximum distribution, so the best constant deviation
  // has the same value (the maximizer may move between equal-payoff bids).
  for (int p = 0; p < 2; ++p) {
    const auto old_best =
        best_constant_deviation(inst, eq, p, TiePolicy::kDeviatorWins);
    const auto new_best = best_constant_deviation(
        red.instance, red.distribution, p, TiePolicy::kDeviatorWins);
    CHECK(new_best.second == doctest::Approx(old_best.second).epsilon(1e-14));
  }

  CHECK_THROWS_AS(
      reduce_to_two(AuctionInstance({1.0, 0.5}),
                    FiniteEquilibrium({{1.0, {0.2, 0.1}, {{0, 1.0}}}})),
      PreconditionError);
  CHECK_THROWS_AS(reduce_to_two(inst, FiniteEquilibrium({{1.0, {0.2, 0.1},
                                                          {{0, 1.0}}}})),
                  InvalidInput);
}

TEST_CASE("discretized worst welfare construction stays a near equilibrium") {
  const ContinuousEquilibrium cont = construct_worst_welfare(kAlphaStar);
  const AuctionEquilibrium disc = discretize(cont, 50);
  const double step = cont.price_cdf().top() / 50.0;

  const OutcomeSummary s = summarize(disc.instance, disc.distribution);
  CHECK(std::abs(s.welfare - kWStar) <= step + 1e-9);
  CHECK(std::abs(s.revenue - kRevenueStar) <= step + 1e-9);

  for (TiePolicy policy : {TiePolicy::kDeviatorWins, TiePolicy::kDeviatorLoses}) {
    const VerificationReport rep = verify_cce(disc, 2.0 / 50, policy);
    CHECK(rep.pass);
    CHECK(rep.max_regret <= 2.0 / 50);
  }

  CHECK_THROWS_AS(discretize(cont, 1), InvalidInput);
}

TEST_CASE("finite discretization rounds down, merges cells, keeps grid points") {
  const FiniteEquilibrium eq({
      {0.6, {0.5 - 1e-4, 0.2}, {{0, 1.0}}},
      {0.4, {0.43, 0.2}, {{0, 1.0}}},
  });
  const FiniteEquilibrium snapped = discretize(eq, 10, 1.0);
  REQUIRE(snapped.atoms().size() == 1);
  CHECK(snapped.atoms()[0].bids == BidProfile{0.4, 0.2});
  CHECK(snapped.atoms()[0].p == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(snapped.atoms()[0].share_of(0) == 1.0);

  // A distribution already supported on the grid is a fixed point.
  const FiniteEquilibrium on_grid({
      {0.5, {0.3, 0.2}, {{0, 1.0}}},
      {0.5, {0.7, 1.0}, {{1, 1.0}}},
  });
  const FiniteEquilibrium same = discretize(on_grid, 10, 1.0);
  REQUIRE(same.atoms().size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(same.atoms()[i].bids == on_grid.atoms()[i].bids);
  }

  CHECK_THROWS_AS(discretize(eq, 10, 0.3), InvalidInput);  // bids above top
}

}  // namespace
}  // namespace aucteq
