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
// Explicit equilibrium constructions: the six-atom two-value example, the
// tight low-welfare family (all players bid a common price drawn from the
// min envelope, the high-value player wins a contiguous price window), the
// symmetric low-revenue family, mixtures of pure equilibria, the n-to-2
// player reduction, and discretization onto uniform price grids.

#ifndef AUCTEQ_CONSTRUCT_HPP_
#define AUCTEQ_CONSTRUCT_HPP_

#include <utility>
#include <vector>

#include "aucteq/auction.hpp"
#include "aucteq/piecewise_cdf.hpp"

namespace aucteq {

// Winner shares on a price interval of the common-bid distribution.
struct SharePiece {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> shares;  // per player, >= 0, sum 1
};

// Winner shares at one explicit atom of the price distribution.
struct AtomShares {
  double x = 0.0;
  std::vector<double> shares;
};

// Equilibrium where a price is drawn from `price_cdf`, every player bids it,
// and the winner is picked per the share function. Invariants, enforced at
// construction: pieces are contiguous and cover [0, top] exactly; every
// share vector has one entry per player, non-negative, summing to 1 within
// 1e-12; atom shares align one-to-one with the cdf's atoms.
class ContinuousEquilibrium {
 public:
  ContinuousEquilibrium(AuctionInstance instance, PiecewiseCdf price_cdf,
                        std::vector<SharePiece> share_pieces,
                        std::vector<AtomShares> atom_shares);

  const AuctionInstance& instance() const { return instance_; }
  const PiecewiseCdf& price_cdf() const { return price_cdf_; }
  const std::vector<SharePiece>& share_pieces() const { return share_pieces_; }
  const std::vector<AtomShares>& atom_shares() const { return atom_shares_; }

 private:
  AuctionInstance instance_;
  PiecewiseCdf price_cdf_;
  std::vector<SharePiece> share_pieces_;
  std::vector<AtomShares> atom_shares_;
};

// Exact aggregation using the closed-form segment integrals.
OutcomeSummary summarize(const ContinuousEquilibrium& eq);

// The high-value player's winning region: prices in [s, t] plus a fraction
// of the atom at price 0. quantile_lo is the region's start in quantile
// space. |win_prob - q| <= 1e-10 and |utility - alpha| <= 1e-10 on return.
struct WinnerAssignment {
  double quantile_lo = 0.0;
  double s = 0.0;
  double t = 0.0;
  double atom_share = 0.0;  // fraction of the price-0 atom won
  double win_prob = 0.0;
  double utility = 0.0;
};

// Finds the contiguous quantile window of mass q = q_of_alpha(alpha) on
// min_envelope(alpha, beta_of_alpha(alpha), 1-alpha) giving the value-1
// player utility exactly alpha. The window utility decreases continuously
// from u_max (window at the bottom) to u_min (window at the top), so
// bisection applies; throws ConstructionError when alpha is outside
// [u_min, u_max].
WinnerAssignment solve_winner_assignment(double alpha);

// Values (1, 1-alpha), both bid a price drawn from the min envelope with
// beta = beta_of_alpha(alpha); the value-1 player wins a window chosen by
// solve_winner_assignment, so utilities are exactly (alpha, beta). Welfare
// equals worst_welfare_curve(alpha). Certified for alpha in [0.27, 0.28].
ContinuousEquilibrium construct_worst_welfare(double alpha);

// One-segment variant: beta = (1-alpha)*alpha, the value-1 player wins
// exactly the atom at price 0 (probability alpha, utility alpha). Welfare is
// alpha + (1-alpha)^2. The low-value player's deviation constraint holds iff
// 2*alpha - ln(alpha) - 2 >= 0; it is tight, and the welfare matches
// single_segment_welfare_curve(alpha), exactly at that curve's stationary
// point alpha ~0.20319.
ContinuousEquilibrium construct_single_segment_worst_welfare(double alpha);

// n players of common value v bid a price drawn from F(x) = alpha/(v-x) on
// [0, v-alpha] with alpha = v/e^(n-1); every player wins share 1/n at every
// price. Per-player utility is alpha; revenue is (1 - n/e^(n-1))*v.
ContinuousEquilibrium construct_symmetric_worst_revenue(int n, double v);

// Six-atom distribution over values (2, 1): the low-value player overbids
// narrowly at the two cheapest prices and loses the four expensive ones.
// A coarse equilibrium for small epsilon but far from a correlated one.
// Requires 0 < epsilon <= 1e-3.
AuctionEquilibrium construct_table1(double epsilon = 1e-4);

// Mixture over pure equilibria: at each (price, mass) both players bid the
// price and the high-value player wins. All prices must lie in [v2, v1];
// masses must sum to 1.
AuctionEquilibrium construct_pure_nash_mixture(
    double v1, double v2,
    const std::vector<std::pair<double, double>>& price_masses);

// Drops players 3..n: any winner share held by them moves to player 1, and
// both kept bids absorb the dropped players' maximum (new bid_i =
// max(bid_i, dropped max)). Each kept player's opponent-maximum distribution
// is then exactly what it was, so constant-deviation payoffs are preserved
// bid for bid, the winning price distribution and revenue are unchanged, and
// for supports without overbidding players 1 and 2 never lose utility.
// Requires n >= 3.
AuctionEquilibrium reduce_to_two(const AuctionInstance& instance,
                                 const FiniteEquilibrium& eq);

// Rounds the common-bid distribution down onto the uniform grid
// {j*top/k : j = 0..k}; cell mass collapses to the cell's left endpoint and
// winner shares are mass-averaged per cell. Welfare and revenue move by at
// most top/k. Requires k >= 2.
AuctionEquilibrium discretize(const ContinuousEquilibrium& eq, int k);

// Same rounding for an already finite distribution over [0, top]; bids move
// down to the nearest grid point, shares are kept, duplicates are merged.
// A distribution already supported on the grid comes back unchanged.
FiniteEquilibrium discretize(const FiniteEquilibrium& eq, int k, double top);

}  // namespace aucteq

#endif  // AUCTEQ_CONSTRUCT_HPP_
