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

#include "aucteq/learning.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "aucteq/errors.hpp"

namespace aucteq {

namespace {

// Whether bidding `bid` beats `others_max` for `player` under the instance
// tie rule, where `rank` is the best (smallest) tie rank among the players
// currently bidding `others_max`.
bool wins_at(const AuctionInstance& instance, int player, double bid,
             double others_max, int best_other_rank) {
  if (bid > others_max) return true;
  if (bid < others_max) return false;
  return instance.tie_rank(player) < best_other_rank;
}

class Learner {
 public:
  Learner(LearnerAlgorithm algorithm, std::size_t num_actions,
          long long rounds, double learning_rate)
      : algorithm_(algorithm),
        score_(num_actions, 0.0),
        probs_(num_actions, 1.0 / static_cast<double>(num_actions)) {
    if (algorithm_ == LearnerAlgorithm::kMultiplicativeWeights) {
      eta_ = learning_rate > 0.0
                 ? learning_rate
                 : std::sqrt(std::log(static_cast<double>(num_actions)) /
                             static_cast<double>(rounds));
    }
  }

  const std::vector<double>& probs() const { return probs_; }

  // counterfactual[a] is this player's payoff had they bid action a against
  // the realized opponent bids; `played` is the realized payoff.
  void update(const std::vector<double>& counterfactual, double played) {
    if (algorithm_ == LearnerAlgorithm::kRegretMatching) {
      double positive = 0.0;
      for (std::size_t a = 0; a < score_.size(); ++a) {
        score_[a] += counterfactual[a] - played;
        positive += std::max(0.0, score_[a]);
      }
      if (positive > 0.0) {
        for (std::size_t a = 0; a < score_.size(); ++a) {
          probs_[a] = std::max(0.0, score_[a]) / positive;
        }
      } else {
        std::fill(probs_.begin(), probs_.end(),
                  1.0 / static_cast<double>(probs_.size()));
      }
    } else {
      double top = -1e300;
      for (std::size_t a = 0; a < score_.size(); ++a) {
        score_[a] += counterfactual[a];
        top = std::max(top, score_[a]);
      }
      double total = 0.0;
      for (std::size_t a = 0; a < score_.size(); ++a) {
        probs_[a] = std::exp(eta_ * (score_[a] - top));
        total += probs_[a];
      }
      for (double& p : probs_) p /= total;
    }
  }

 private:
  LearnerAlgorithm algorithm_;
  double eta_ = 0.0;
  std::vector<double> score_;  // cumulative regret or cumulative payoff
  std::vector<double> probs_;
};

std::size_t sample(const std::vector<double>& probs, double u) {
  double cum = 0.0;
  for (std::size_t a = 0; a < probs.size(); ++a) {
    cum += probs[a];
    if (u < cum) return a;
  }
  return probs.size() - 1;
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double SimResult::eps() const {
  double out = 0.0;
  for (double r : average_regret) out = std::max(out, r);
  return std::max(0.0, out);
}

SimResult run_no_regret(const AuctionInstance& instance, const BidGrid& grid,
                        const LearnerConfig& config) {
  if (config.rounds < 1) throw InvalidInput("need at least one round");
  const int n = instance.num_players();

  std::vector<Learner> learners;
  learners.reserve(n);
  for (int i = 0; i < n; ++i) {
    learners.emplace_back(config.algorithm, grid.admissible(i).size(),
                          config.rounds, config.learning_rate);
  }

  std::mt19937_64 rng(config.seed);
  std::map<BidProfile, double> counts;
  std::vector<TrajectoryPoint> trajectory;
  std::vector<BidProfile> history;
  if (config.record_history) {
    history.reserve(static_cast<std::size_t>(config.rounds));
  }
  const long long stride =
      config.trajectory_samples > 0
          ? std::max<long long>(1, config.rounds / config.trajectory_samples)
          : config.rounds + 1;

  // Best-fixed-bid bookkeeping: cumulative deviator-wins payoff per player
  // per own grid point, plus the realized payoff.
  std::vector<std::vector<double>> dev_payoff(n);
  for (int i = 0; i < n; ++i) dev_payoff[i].assign(grid.points().size(), 0.0);
  std::vector<double> realized(n, 0.0);

  double welfare_sum = 0.0;
  double revenue_sum = 0.0;
  BidProfile bids(n, 0.0);
  std::vector<std::size_t> action(n, 0);
  std::vector<double> counterfactual;

  for (long long t = 0; t < config.rounds; ++t) {
    for (int i = 0; i < n; ++i) {
      action[i] = sample(learners[i].probs(), uniform01(rng));
      bids[i] = grid.admissible(i)[action[i]];
    }
    const Outcome o = outcome(instance, bids);
    welfare_sum += instance.value(o.winner);
    revenue_sum += o.price;
    if (config.record_history) history.push_back(bids);
    counts[bids] += 1.0;

    for (int i = 0; i < n; ++i) {
      double others = 0.0;
      int best_rank = instance.num_players();
      bool first = true;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (first || bids[j] > others) {
          others = bids[j];
          best_rank = instance.tie_rank(j);
        } else if (bids[j] == others) {
          best_rank = std::min(best_rank, instance.tie_rank(j));
        }
        first = false;
      }
      const double played =
          o.winner == i ? instance.value(i) - bids[i] : 0.0;

      const auto& mine = grid.admissible(i);
      counterfactual.assign(mine.size(), 0.0);
      for (std::size_t a = 0; a < mine.size(); ++a) {
        if (wins_at(instance, i, mine[a], others, best_rank)) {
          counterfactual[a] = instance.value(i) - mine[a];
        }
      }
      learners[i].update(counterfactual, played);

      realized[i] += played;
      const auto& pts = grid.points();
      for (std::size_t a = 0; a < pts.size(); ++a) {
        if (pts[a] >= others) {
          dev_payoff[i][a] += instance.value(i) - pts[a];
        }
      }
    }

    if ((t + 1) % stride == 0 || t + 1 == config.rounds) {
      trajectory.push_back({t + 1, welfare_sum / static_cast<double>(t + 1),
                            revenue_sum / static_cast<double>(t + 1)});
    }
  }

  const double rounds = static_cast<double>(config.rounds);
  std::vector<Atom> atoms;
  atoms.reserve(counts.size());
  for (const auto& [profile, count] : counts) {
    Atom a;
    a.p = count / rounds;
    a.bids = profile;
    a.winner_shares.push_back({outcome(instance, profile).winner, 1.0});
    atoms.push_back(std::move(a));
  }

  SimResult result{FiniteEquilibrium(std::move(atoms)), {}, {}, {}};
  result.trajectory = std::move(trajectory);
  result.history = std::move(history);
  result.average_regret.resize(n);
  for (int i = 0; i < n; ++i) {
    double best = 0.0;  // bidding 0 forever never loses money
    for (double cum : dev_payoff[i]) best = std::max(best, cum);
    result.average_regret[i] = (best - realized[i]) / rounds;
  }
  return result;
}

double external_regret(const AuctionInstance& instance,
                       const std::vector<BidProfile>& history, int player,
                       const std::vector<double>& deviations) {
  if (history.empty()) throw InvalidInput("empty history");
  double realized = 0.0;
  double best = 0.0;
  for (double d : deviations) {
    double cum = 0.0;
    for (const BidProfile& bids : history) {
      double others = 0.0;
      bool first = true;
      for (std::size_t j = 0; j < bids.size(); ++j) {
        if (static_cast<int>(j) == player) continue;
        if (first || bids[j] > others) others = bids[j];
        first = false;
      }
      if (d >= others) cum += instance.value(player) - d;
    }
    best = std::max(best, cum);
  }
  for (const BidProfile& bids : history) {
    const Outcome o = outcome(instance, bids);
    if (o.winner == player) realized += instance.value(player) - o.price;
  }
  return (best - realized) / static_cast<double>(history.size());
}

}  // namespace aucteq
