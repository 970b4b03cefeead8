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
// Decides whether a finite joint bid distribution is an (eps-)coarse
// equilibrium (no constant deviation helps) or an (eps-)correlated
// equilibrium (no deviation helps even conditioned on the recommended bid).
//
// Deviations are scanned over the candidate set {0} union all support bids.
// That is exhaustive over real bids: between support points the winning set
// is constant and the payoff decreases in the bid, so the supremum over all
// reals is attained at a candidate under the deviator-wins tie policy, and
// "bidding just above g" is exactly candidate g under deviator-wins. Both
// tie policies are therefore always evaluated; the report's pass flag is
// keyed to the policy argument.

#ifndef AUCTEQ_VERIFY_HPP_
#define AUCTEQ_VERIFY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aucteq/auction.hpp"

namespace aucteq {

enum class TiePolicy {
  kDeviatorWins,   // a deviation bid equal to the winning bid wins
  kDeviatorLoses,  // it loses
};

std::string to_string(TiePolicy policy);

struct DeviationStats {
  double best_bid = 0.0;
  double best_utility = 0.0;
  double regret = 0.0;  // max(0, best_utility - reference utility)
};

struct PlayerVerification {
  double equilibrium_utility = 0.0;
  DeviationStats deviator_wins;
  DeviationStats deviator_loses;

  const DeviationStats& under(TiePolicy policy) const {
    return policy == TiePolicy::kDeviatorWins ? deviator_wins : deviator_loses;
  }
};

// The most profitable (recommendation, deviation) pair found by the
// conditional check.
struct ConditionalWorstCase {
  int player = 0;
  double recommendation = 0.0;
  double deviation = 0.0;
  double gain = 0.0;  // conditional deviation utility minus on-path utility
  double on_path_utility = 0.0;
};

struct VerificationReport {
  TiePolicy policy = TiePolicy::kDeviatorLoses;
  double tolerance = 0.0;
  bool pass = false;
  double max_regret = 0.0;  // under `policy`
  std::vector<PlayerVerification> players;
  // Present for conditional (correlated) verification only.
  std::optional<ConditionalWorstCase> worst_conditional;
};

// {0} union every bid appearing in any atom, sorted, deduplicated.
std::vector<double> candidate_deviations(const FiniteEquilibrium& eq);

// Best constant deviation for one player over the candidate set:
// maximizes sum over atoms of p * (value - d) * win(d, others, policy).
// Returns (bid, utility); ties prefer the lowest bid.
std::pair<double, double> best_constant_deviation(const AuctionInstance& instance,
                                                  const FiniteEquilibrium& eq,
                                                  int player, TiePolicy policy);

// Coarse check: every player's best constant deviation must not beat the
// equilibrium utility by more than `tolerance`. Reports both tie policies;
// pass/max_regret follow `policy`.
VerificationReport verify_cce(const AuctionInstance& instance,
                              const FiniteEquilibrium& eq, double tolerance,
                              TiePolicy policy = TiePolicy::kDeviatorLoses);

// Conditional check: for every player and every recommended bid of
// conditional probability >= 1e-15, the best deviation conditioned on the
// recommendation must not beat the conditional on-path utility by more than
// `tolerance`. On finite supports this exhausts all deviation functions.
// Per-player stats hold the worst conditional case under each policy.
VerificationReport verify_ce(const AuctionInstance& instance,
                             const FiniteEquilibrium& eq, double tolerance,
                             TiePolicy policy = TiePolicy::kDeviatorLoses);

VerificationReport verify_cce(const AuctionEquilibrium& eq, double tolerance,
                              TiePolicy policy = TiePolicy::kDeviatorLoses);
VerificationReport verify_ce(const AuctionEquilibrium& eq, double tolerance,
                             TiePolicy policy = TiePolicy::kDeviatorLoses);

struct CharacterizationReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// Outcome shape shared by all correlated equilibria: when v1 > v2 the top
// player wins always and the price lies in [v2 - tolerance, v1 + tolerance];
// when v1 = v2 every winner has the top value, the price is v1 within
// tolerance, and all utilities vanish within tolerance. Requires that the
// input passes the conditional check at `tolerance` (deviator-loses);
// throws PreconditionError otherwise.
CharacterizationReport check_ce_characterization(const AuctionInstance& instance,
                                                 const FiniteEquilibrium& eq,
                                                 double tolerance);

}  // namespace aucteq

#endif  // AUCTEQ_VERIFY_HPP_
