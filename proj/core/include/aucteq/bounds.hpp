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
// Closed forms for the extremal welfare and revenue of coarse equilibria of
// two-player first-price auctions with values (1, 1-alpha), and for the
// symmetric n-player revenue construction. All logarithms are natural.

#ifndef AUCTEQ_BOUNDS_HPP_
#define AUCTEQ_BOUNDS_HPP_

#include <string>
#include <utility>
#include <vector>

namespace aucteq {

// Value of a bound plus the arguments it is attained at and the residual of
// the defining root equation (0 when the bound is a plain formula).
struct BoundResult {
  double value = 0.0;
  std::vector<std::pair<std::string, double>> args;
  double residual = 0.0;

  double arg(const std::string& name) const;  // throws InvalidInput if absent
};

// Low-value player's equilibrium utility on the worst-welfare parameter
// curve: beta(alpha) = (alpha - alpha^2) / (e*alpha - alpha + 1).
double beta_of_alpha(double alpha);

// Welfare floor of the min-envelope family with parameters (alpha, beta, v),
// values (1, v): revenue (the envelope mean) plus both players' utilities
// alpha + beta. Dispatches on the envelope shape:
//   beta >= v*alpha  ->  one-segment branch, revenue 1 - alpha + alpha*ln(alpha)
//   beta <  v*alpha  ->  two-segment branch (requires v < 1).
double welfare_lb(double alpha, double beta, double v);
double welfare_lb_one_segment(double alpha, double beta);
double welfare_lb_two_segments(double alpha, double beta, double v);

// welfare_lb along the binding curve beta = beta_of_alpha(alpha),
// v = 1 - alpha, simplified: alpha*ln(e*alpha/((e-1)*alpha + 1)) + 1.
double worst_welfare_curve(double alpha);

// welfare_lb along the one-segment boundary beta = v*alpha, v = 1 - alpha:
// 1 + alpha*(1 - alpha) + alpha*ln(alpha).
double single_segment_welfare_curve(double alpha);

// Global minimum over both curves. value = min welfare (~0.8135594 at
// alpha ~0.2743216); args: alpha, beta, v, q, plus the one-segment curve's
// own minimizer (single_alpha ~0.2032, single_welfare ~0.8381). residual is
// the stationarity residual at the returned alpha.
BoundResult minimize_welfare();

// High-value player's win probability q = (W - v)/(1 - v) on the binding
// curve, simplified: 2 + ln(alpha/(1 + (e-1)*alpha)).
double q_of_alpha(double alpha);

// Price where the envelope switches branches on the binding curve:
// (e-1)*(1-alpha)/e.
double crossover(double alpha);

// Range of the high-value player's utility over contiguous winning windows
// of mass q: u_min (winning the top of the price range) and u_max (winning
// the bottom). Closed forms
//   u_min = -alpha*ln(1-q),
//   u_max = q - v*q + beta - beta*ln(beta/(q*v)).
// The formulas are certified for alpha in [0.27, 0.28]; outside that window
// they are still evaluated but flagged.
struct UtilityBounds {
  double u_min = 0.0;
  double u_max = 0.0;
  bool alpha_in_certified_range = true;
};
UtilityBounds u_bounds(double alpha);

// Smallest possible revenue of a coarse equilibrium with both values 1,
// attained by the symmetric construction at n = 2: 1 - 2/e.
double revenue_floor();

// Symmetric n-player construction with common value v: per-player utility
// alpha = v/e^(n-1) and revenue (1 - n/e^(n-1))*v.
double symmetric_alpha(int n, double v);
double symmetric_revenue_bound(int n, double v);

// Revenue lower bound for values (v, 1), v >= 1, as a function of the
// low-value player's utility alpha:
//   c = (1 - 1/e)*(v - 1) + alpha,
//   rhs = v - c + c*ln(c/v).
double revenue_lb_rhs(double alpha, double v);

// Value gap v >= 324/eps^4 forces revenue >= 1 - eps. eps in (0, 1).
double gap_threshold(double eps);

}  // namespace aucteq

#endif  // AUCTEQ_BOUNDS_HPP_
