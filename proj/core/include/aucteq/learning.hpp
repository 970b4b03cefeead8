// Copyright 2026 The aucteq Authors. All rights reserved.
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
//
// No-regret bidding dynamics on a fixed grid. The empirical distribution of
// play approaches the coarse-equilibrium polytope; the reported per-player
// external regret bounds the distance: the empirical distribution is an
// eps-coarse equilibrium for eps = max(0, max player regret).

#ifndef AUCTEQ_LEARNING_HPP_
#define AUCTEQ_LEARNING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "aucteq/auction.hpp"
#include "aucteq/lp.hpp"

namespace aucteq {

enum class LearnerAlgorithm { kRegretMatching, kMultiplicativeWeights };

struct LearnerConfig {
  LearnerAlgorithm algorithm = LearnerAlgorithm::kRegretMatching;
  long long rounds = 100000;
  std::uint64_t seed = 1;
  // Multiplicative weights step size; 0 picks sqrt(ln(k)/T).
  double learning_rate = 0.0;
  bool record_history = false;
  int trajectory_samples = 200;
};

struct TrajectoryPoint {
  long long round = 0;  // rounds played so far
  double avg_welfare = 0.0;
  double avg_revenue = 0.0;
};

struct SimResult {
  FiniteEquilibrium empirical;
  // Time-averaged external regret per player: the best fixed grid bid in
  // hindsight (deviator-wins ties, so it upper-bounds every real bid)
  // against the realized play, minus the realized average utility. May be
  // negative.
  std::vector<double> average_regret;
  std::vector<TrajectoryPoint> trajectory;
  std::vector<BidProfile> history;  // empty unless record_history

  double eps() const;  // max(0, max average_regret)
};

// Plays `rounds` rounds of simultaneous no-regret learning, one learner per
// player over their admissible grid bids. In-round outcomes and learner
// feedback use the instance tie_priority; the reported regret uses
// deviator-wins counterfactuals. Deterministic given the seed.
SimResult run_no_regret(const AuctionInstance& instance, const BidGrid& grid,
                        const LearnerConfig& config);

// Time-averaged external regret of `player` over a played history, for a
// given deviation candidate set (deviator-wins counterfactuals).
double external_regret(const AuctionInstance& instance,
                       const std::vector<BidProfile>& history, int player,
                       const std::vector<double>& deviations);

// The uniform variate used by the simulator: 53 random mantissa bits, in
// [0, 1). Pinned here so seeded runs are bit-stable across platforms.
double uniform01(std::mt19937_64& rng);

}  // namespace aucteq

#endif  // AUCTEQ_LEARNING_HPP_
