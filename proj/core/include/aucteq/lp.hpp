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
// Extremal equilibria by linear programming. Variables are probabilities of
// joint bid profiles on a finite grid; one inequality per unilateral
// deviation keeps the distribution an equilibrium; the objective is welfare
// or revenue. Deviation rows use the deviator-wins tie policy and range over
// the full grid, which covers the supremum over all real deviations for any
// feasible support, so feasible points are genuine equilibria of the
// continuous game, not just of the discretized one.

#ifndef AUCTEQ_LP_HPP_
#define AUCTEQ_LP_HPP_

#include <vector>

#include "aucteq/auction.hpp"
#include "aucteq/verify.hpp"

namespace aucteq {

// Strictly increasing bid levels containing 0. When no_overbid is set, each
// player bids only points <= their own value, and every value <= the top
// point must itself be a grid point (so bidding exactly a value stays
// representable).
class BidGrid {
 public:
  // k subdivisions of [0, max value], k >= 1, plus every player value.
  static BidGrid uniform(const AuctionInstance& instance, int k,
                         bool no_overbid);

  BidGrid(std::vector<double> points, const AuctionInstance& instance,
          bool no_overbid);

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& admissible(int player) const {
    return admissible_[player];
  }
  bool no_overbid() const { return no_overbid_; }

 private:
  std::vector<double> points_;
  std::vector<std::vector<double>> admissible_;
  bool no_overbid_ = false;
};

enum class LpObjective { kWelfare, kRevenue };
enum class LpDirection { kMinimize, kMaximize };
enum class EquilibriumClass { kCce, kCe };

struct LpRowInfo {
  int player = 0;
  double deviation = 0.0;
  bool conditional = false;
  double recommendation = 0.0;  // meaningful when conditional
};

// min/max objective . D  subject to  rows . D >= 0, sum D = 1, D >= 0.
struct LpProblem {
  int num_vars = 0;
  std::vector<std::vector<double>> rows;
  std::vector<LpRowInfo> row_info;
  std::vector<double> objective;
  LpDirection direction = LpDirection::kMinimize;
  std::vector<BidProfile> profiles;  // variable index -> joint profile
};

// One row per (player, grid deviation): on-path utility minus the deviation
// payoff (v_i - d) against the profile. On-path winners follow tie_priority.
// Guarded to n <= 3 players (profile count is exponential in n).
LpProblem build_cce_lp(const AuctionInstance& instance, const BidGrid& grid,
                       LpObjective objective, LpDirection direction);

// One row per (player, recommended bid, grid deviation), restricted to
// profiles recommending that bid.
LpProblem build_ce_lp(const AuctionInstance& instance, const BidGrid& grid,
                      LpObjective objective, LpDirection direction);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct SimplexCertificate {
  double max_primal_residual = 0.0;  // violation of the original constraints
  double min_reduced_cost = 0.0;     // over nonbasic columns, >= -1e-9 at opt
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  SimplexCertificate certificate;
  long iterations = 0;
};

LpSolution solve_lp(const LpProblem& problem);

// min c.x  subject to  ge.x >= ge_rhs, eq.x = eq_rhs, x >= 0.
struct DenseLp {
  std::vector<std::vector<double>> ge;
  std::vector<double> ge_rhs;
  std::vector<std::vector<double>> eq;
  std::vector<double> eq_rhs;
  std::vector<double> c;
};

// Two-phase primal simplex on a dense tableau, pivot tolerance 1e-9, with a
// lexicographic ratio test (no cycling). Tall problems of the distribution
// shape (ge rhs all zero, single all-ones equality to 1) are solved through
// their dual, which starts feasible at the slack basis; the recovered point
// is validated against the original rows and falls back to the direct solve
// on any numerical doubt. Deterministic across runs.
LpSolution solve_dense(const DenseLp& lp);

struct ExtremalResult {
  AuctionEquilibrium equilibrium;
  double value = 0.0;
  LpSolution solution;
  VerificationReport report;
};

// Solves the LP and converts the optimum into a verified distribution;
// throws InvariantViolation if the claimed optimum fails verification at
// 1e-7 under deviator-wins (which implies both policies).
ExtremalResult extremal_equilibrium(const AuctionInstance& instance,
                                    const BidGrid& grid, EquilibriumClass cls,
                                    LpObjective objective,
                                    LpDirection direction);

}  // namespace aucteq

#endif  // AUCTEQ_LP_HPP_
