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

#include "aucteq/learning.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "aucteq/auction.hpp"
#include "aucteq/errors.hpp"
#include "aucteq/lp.hpp"
#include "aucteq/verify.hpp"

namespace aucteq {
namespace {

const AuctionInstance& instance() {
  static const AuctionInstance inst({1.0, 0.75});
  return inst;
}

const BidGrid& grid() {
  static const BidGrid g = BidGrid::uniform(instance(), 10, true);
  return g;
}

TEST_CASE("seeded runs are reproducible, different seeds diverge") {
  LearnerConfig config;
  config.rounds = 20000;
  config.seed = 5;
  const SimResult a = run_no_regret(instance(), grid(), config);
  const SimResult b = run_no_regret(instance(), grid(), config);
  CHECK(a.average_regret == b.average_regret);
  REQUIRE_FALSE(a.trajectory.empty());
  CHECK(a.trajectory.back().avg_revenue == b.trajectory.back().avg_revenue);
  CHECK(a.empirical.atoms().size() == b.empirical.atoms().size());

  config.seed = 6;
  const SimResult c = run_no_regret(instance(), grid(), config);
  CHECK(a.trajectory.back().avg_revenue != c.trajectory.back().avg_revenue);
}

TEST_CASE("regret matching reaches low regret and couples to the verifier") {
  LearnerConfig config;
  config.rounds = 100000;
  config.seed = 1;
  const SimResult result = run_no_regret(instance(), grid(), config);
  CHECK(result.eps() <= 0.05);

  // The verifier's candidate set is contained in the grid and its utilities
  // are the same averages the learner tracked, so the empirical distribution
  // always passes at its own eps.
  for (int seed : {1, 2}) {
    LearnerConfig c2;
    c2.rounds = 30000;
    c2.seed = static_cast<std::uint64_t>(seed);
    const SimResult r = run_no_regret(instance(), grid(), c2);
    const VerificationReport rep = verify_cce(
        instance(), r.empirical, r.eps() + 1e-9, TiePolicy::kDeviatorWins);
    CHECK(rep.pass);
  }
}

TEST_CASE("empirical play is a distribution supported on admissible bids") {
  LearnerConfig config;
  config.rounds = 5000;
  config.seed = 3;
  const SimResult result = run_no_regret(instance(), grid(), config);
  double mass = 0.0;
  for (const Atom& a : result.empirical.atoms()) {
    mass += a.p;
    for (int i = 0; i < 2; ++i) {
      const auto& mine = grid().admissible(i);
      CHECK(std::binary_search(mine.begin(), mine.end(), a.bids[i]));
    }
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("recorded history reproduces the reported regret") {
  LearnerConfig config;
  config.rounds = 30000;
  config.seed = 11;
  config.record_history = true;
  const SimResult result = run_no_regret(instance(), grid(), config);
  REQUIRE(result.history.size() == 30000);
  for (int player = 0; player < 2; ++player) {
    const double replay = external_regret(instance(), result.history, player,
                                          grid().points());
    CHECK(replay ==
          doctest::Approx(result.average_regret[player]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(external_regret(instance(), {}, 0, grid().points()),
                  InvalidInput);
}

TEST_CASE("multiplicative weights also converges, rate override works") {
  LearnerConfig config;
  config.algorithm = LearnerAlgorithm::kMultiplicativeWeights;
  config.rounds = 100000;
  config.seed = 4;
  const SimResult auto_rate = run_no_regret(instance(), grid(), config);
  CHECK(auto_rate.eps() <= 0.05);

  config.learning_rate = 0.5;
  const SimResult manual = run_no_regret(instance(), grid(), config);
  CHECK(manual.eps() >= 0.0);
  CHECK(auto_rate.trajectory.back().avg_revenue !=
        manual.trajectory.back().avg_revenue);
}

TEST_CASE("trajectory sampling and bounds") {
  LearnerConfig config;
  config.rounds = 100000;
  config.seed = 9;
  config.trajectory_samples = 200;
  const SimResult result = run_no_regret(instance(), grid(), config);
  CHECK(result.trajectory.size() == 200);
  long long prev = 0;
  for (const TrajectoryPoint& pt : result.trajectory) {
    CHECK(pt.round > prev);
    prev = pt.round;
    CHECK(pt.avg_welfare >= 0.75 - 1e-12);
    CHECK(pt.avg_welfare <= 1.0 + 1e-12);
    CHECK(pt.avg_revenue >= 0.0);
    CHECK(pt.avg_revenue <= 1.0 + 1e-12);
  }
  CHECK(result.trajectory.back().round == 100000);

  config.trajectory_samples = 0;
  const SimResult only_final = run_no_regret(instance(), grid(), config);
  CHECK(only_final.trajectory.size() == 1);

  config.rounds = 0;
  CHECK_THROWS_AS(run_no_regret(instance(), grid(), config), InvalidInput);
}

}  // namespace
}  // namespace aucteq
