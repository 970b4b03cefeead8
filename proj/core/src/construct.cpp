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

#include "aucteq/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "aucteq/bounds.hpp"
#include "aucteq/errors.hpp"
#include "aucteq/numeric.hpp"

namespace aucteq {

namespace {

double seg_mass(const ReciprocalSegment& s, double l, double r) {
  return s.value_at(r) - s.value_at(l);
}

// Integral of x dF over [l, r] inside one segment. Antiderivative of
// x a/(b-x)^2 is a*(b/(b-x) + ln(b-x)).
double seg_price_integral(const ReciprocalSegment& s, double l, double r) {
  auto g = [&](double x) {
    return s.a * (s.b / (s.b - x) + std::log(s.b - x));
  };
  return g(r) - g(l);
}

// Integral of the price over the quantile window [p1, p2]. Walks atoms and
// segments in price order; an atom occupies the quantile slab
// [cum, cum + mass] at constant price, a segment maps quantile p to price
// b - a/p, whose antiderivative is b*p - a*ln(p).
double price_quantile_integral(const PiecewiseCdf& cdf, double p1, double p2) {
  double total = 0.0;
  double cum = 0.0;
  std::size_t ai = 0;
  std::size_t si = 0;
  const auto& atoms = cdf.atoms();
  const auto& segs = cdf.segments();
  while (ai < atoms.size() || si < segs.size()) {
    const bool take_atom =
        ai < atoms.size() && (si >= segs.size() || atoms[ai].x <= segs[si].lo);
    if (take_atom) {
      const double lo = std::max(cum, p1);
      const double hi = std::min(cum + atoms[ai].mass, p2);
      if (hi > lo) total += atoms[ai].x * (hi - lo);
      cum += atoms[ai].mass;
      ++ai;
    } else {
      const auto& s = segs[si];
      const double lo = std::max(s.value_at(s.lo), p1);
      const double hi = std::min(s.value_at(s.hi), p2);
      if (hi > lo) total += s.b * (hi - lo) - s.a * std::log(hi / lo);
      cum = s.value_at(s.hi);
      ++si;
    }
  }
  return total;
}

// Largest j with grid[j] <= x.
std::size_t cell_index(const std::vector<double>& grid, double x) {
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  return static_cast<std::size_t>(it - grid.begin()) - 1;
}

std::vector<double> uniform_grid(int k, double top) {
  std::vector<double> grid(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) grid[j] = j * top / k;
  grid[k] = top;  // guard against j*top/k rounding
  return grid;
}

}  // namespace

ContinuousEquilibrium::ContinuousEquilibrium(AuctionInstance instance,
                                             PiecewiseCdf price_cdf,
                                             std::vector<SharePiece> share_pieces,
                                             std::vector<AtomShares> atom_shares)
    : instance_(std::move(instance)),
      price_cdf_(std::move(price_cdf)),
      share_pieces_(std::move(share_pieces)),
      atom_shares_(std::move(atom_shares)) {
  const int n = instance_.num_players();
  auto check_shares = [n](const std::vector<double>& shares) {
    if (static_cast<int>(shares.size()) != n) {
      throw InvalidInput("share vector size differs from the player count");
    }
    double sum = 0.0;
    for (double s : shares) {
      if (!(s >= 0.0)) throw InvalidInput("winner shares must be >= 0");
      sum += s;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw InvalidInput("winner shares must sum to 1, got " +
                         format_double(sum));
    }
  };

  std::sort(share_pieces_.begin(), share_pieces_.end(),
            [](const SharePiece& a, const SharePiece& b) { return a.lo < b.lo; });
  double cursor = 0.0;
  for (const auto& piece : share_pieces_) {
    if (piece.lo != cursor) {
      throw InvalidInput("share pieces must tile [0, top] without gaps");
    }
    if (!(piece.hi > piece.lo)) {
      throw InvalidInput("share piece must have positive length");
    }
    check_shares(piece.shares);
    cursor = piece.hi;
  }
  if (cursor != price_cdf_.top()) {
    throw InvalidInput("share pieces must reach the cdf top");
  }

  if (atom_shares_.size() != price_cdf_.atoms().size()) {
    throw InvalidInput("need one share vector per cdf atom");
  }
  for (std::size_t i = 0; i < atom_shares_.size(); ++i) {
    if (atom_shares_[i].x != price_cdf_.atoms()[i].x) {
      throw InvalidInput("atom shares must list the cdf atoms in order");
    }
    check_shares(atom_shares_[i].shares);
  }
}

OutcomeSummary summarize(const ContinuousEquilibrium& eq) {
  const AuctionInstance& inst = eq.instance();
  const int n = inst.num_players();
  OutcomeSummary out;
  out.win_prob.assign(n, 0.0);
  out.expected_payment.assign(n, 0.0);
  out.utility.assign(n, 0.0);

  const PiecewiseCdf& cdf = eq.price_cdf();
  for (std::size_t i = 0; i < cdf.atoms().size(); ++i) {
    const CdfAtom& a = cdf.atoms()[i];
    const std::vector<double>& sh = eq.atom_shares()[i].shares;
    for (int p = 0; p < n; ++p) {
      out.win_prob[p] += a.mass * sh[p];
      out.expected_payment[p] += a.mass * sh[p] * a.x;
    }
  }
  for (const SharePiece& piece : eq.share_pieces()) {
    for (const ReciprocalSegment& seg : cdf.segments()) {
      const double l = std::max(piece.lo, seg.lo);
      const double r = std::min(piece.hi, seg.hi);
      if (r <= l) continue;
      const double mass = seg_mass(seg, l, r);
      const double paid = seg_price_integral(seg, l, r);
      for (int p = 0; p < n; ++p) {
        out.win_prob[p] += mass * piece.shares[p];
        out.expected_payment[p] += paid * piece.shares[p];
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    out.utility[p] = inst.value(p) * out.win_prob[p] - out.expected_payment[p];
    out.welfare += inst.value(p) * out.win_prob[p];
    out.revenue += out.expected_payment[p];
  }
  return out;
}

WinnerAssignment solve_winner_assignment(double alpha) {
  const double beta = beta_of_alpha(alpha);
  const double v = 1.0 - alpha;
  const double q = q_of_alpha(alpha);
  if (!(q > 0.0 && q < 1.0)) {
    throw ConstructionError("win probability q(alpha) outside (0, 1)");
  }
  const PiecewiseCdf cdf = min_envelope(alpha, beta, v);

  // Utility of the value-1 player when winning the quantile window
  // [tau, tau + q]. Decreasing in tau: raising tau swaps cheap prices for
  // expensive ones.
  auto window_utility = [&](double tau) {
    return q - price_quantile_integral(cdf, tau, tau + q);
  };
  const double u_hi = window_utility(0.0);
  const double u_lo = window_utility(1.0 - q);
  if (alpha > u_hi + 1e-12 || alpha < u_lo - 1e-12) {
    throw ConstructionError(
        "target utility " + format_double(alpha) + " outside the window range [" +
        format_double(u_lo) + ", " + format_double(u_hi) + "]");
  }

  double tau;
  if (alpha >= u_hi) {
    tau = 0.0;
  } else if (alpha <= u_lo) {
    tau = 1.0 - q;
  } else {
    tau = bisect([&](double t) { return window_utility(t) - alpha; }, 0.0,
                 1.0 - q, 1e-13);
  }

  WinnerAssignment w;
  w.quantile_lo = tau;
  w.utility = window_utility(tau);
  if (std::abs(w.utility - alpha) > 1e-10) {
    throw ConstructionError("window bisection missed the target utility by " +
                            format_double(w.utility - alpha));
  }

  const double m0 = cdf.atom_mass_at(0.0);
  if (tau < m0) {
    w.s = 0.0;
    w.atom_share = (std::min(m0, tau + q) - tau) / m0;
  } else {
    w.s = cdf.inverse(tau);
    w.atom_share = 0.0;
  }
  w.t = cdf.inverse(tau + q);
  w.win_prob = w.atom_share * m0 + (cdf.eval(w.t) - cdf.eval(w.s));
  if (std::abs(w.win_prob - q) > 1e-10) {
    throw ConstructionError("window win probability off target by " +
                            format_double(w.win_prob - q));
  }
  return w;
}

ContinuousEquilibrium construct_worst_welfare(double alpha) {
  const double beta = beta_of_alpha(alpha);
  const double v = 1.0 - alpha;
  const WinnerAssignment w = solve_winner_assignment(alpha);
  PiecewiseCdf cdf = min_envelope(alpha, beta, v);

  std::vector<SharePiece> pieces;
  auto add = [&pieces](double lo, double hi, double high_share) {
    if (hi > lo) pieces.push_back({lo, hi, {high_share, 1.0 - high_share}});
  };
  add(0.0, w.s, 0.0);
  add(w.s, w.t, 1.0);
  add(w.t, cdf.top(), 0.0);

  std::vector<AtomShares> atoms;
  atoms.push_back({0.0, {w.atom_share, 1.0 - w.atom_share}});

  return ContinuousEquilibrium(AuctionInstance({1.0, v}), std::move(cdf),
                               std::move(pieces), std::move(atoms));
}

ContinuousEquilibrium construct_single_segment_worst_welfare(double alpha) {
  const double v = 1.0 - alpha;
  const double beta = v * alpha;
  PiecewiseCdf cdf = min_envelope(alpha, beta, v);

  // Value-1 player wins exactly the atom at 0; the other player wins the
  // whole continuous range.
  std::vector<SharePiece> pieces = {{0.0, cdf.top(), {0.0, 1.0}}};
  std::vector<AtomShares> atoms = {{0.0, {1.0, 0.0}}};
  return ContinuousEquilibrium(AuctionInstance({1.0, v}), std::move(cdf),
                               std::move(pieces), std::move(atoms));
}

ContinuousEquilibrium construct_symmetric_worst_revenue(int n, double v) {
  const double alpha = symmetric_alpha(n, v);
  PiecewiseCdf cdf({{0.0, alpha / v}}, {{alpha, v, 0.0, v - alpha}}, v - alpha);

  const std::vector<double> equal(n, 1.0 / n);
  std::vector<SharePiece> pieces = {{0.0, cdf.top(), equal}};
  std::vector<AtomShares> atoms = {{0.0, equal}};
  return ContinuousEquilibrium(AuctionInstance(std::vector<double>(n, v)),
                               std::move(cdf), std::move(pieces),
                               std::move(atoms));
}

AuctionEquilibrium construct_table1(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1e-3)) {
    throw InvalidInput("epsilon must lie in (0, 1e-3]");
  }
  const std::vector<std::pair<int, double>> low = {{1, 1.0}};   // value-1 player
  const std::vector<std::pair<int, double>> high = {{0, 1.0}};  // value-2 player
  // bids are (value-2 player, value-1 player)
  std::vector<Atom> atoms = {
      {0.02, {0.0, epsilon}, low},
      {0.02, {0.1, 0.1 + epsilon}, low},
      {0.03, {0.5, 0.5 - epsilon}, high},
      {0.11, {0.8, 0.8 - epsilon}, high},
      {0.19, {0.9, 0.9 - epsilon}, high},
      {0.63, {1.0, 1.0 - epsilon}, high},
  };
  return {AuctionInstance({2.0, 1.0}), FiniteEquilibrium(std::move(atoms))};
}

AuctionEquilibrium construct_pure_nash_mixture(
    double v1, double v2,
    const std::vector<std::pair<double, double>>& price_masses) {
  if (!(v1 >= v2 && v2 >= 0.0)) {
    throw InvalidInput("values must satisfy v1 >= v2 >= 0");
  }
  if (price_masses.empty()) throw InvalidInput("need at least one price");
  std::vector<Atom> atoms;
  atoms.reserve(price_masses.size());
  for (const auto& [price, mass] : price_masses) {
    if (!(price >= v2 && price <= v1)) {
      throw InvalidInput("pure-equilibrium price " + format_double(price) +
                         " outside [v2, v1]");
    }
    atoms.push_back({mass, {price, price}, {{0, 1.0}}});
  }
  return {AuctionInstance({v1, v2}),
          FiniteEquilibrium(merge_duplicate_atoms(std::move(atoms)))};
}

AuctionEquilibrium reduce_to_two(const AuctionInstance& instance,
                                 const FiniteEquilibrium& eq) {
  const int n = instance.num_players();
  if (n < 3) throw PreconditionError("reduction needs at least three players");
  if (eq.num_players() != n) {
    throw InvalidInput("distribution has a different player count");
  }

  std::vector<int> priority;
  for (int p : instance.tie_priority()) {
    if (p < 2) priority.push_back(p);
  }
  AuctionInstance reduced({instance.value(0), instance.value(1)}, priority);

  std::vector<Atom> atoms;
  atoms.reserve(eq.atoms().size());
  for (const Atom& a : eq.atoms()) {
    double moved = 0.0;
    for (const auto& [player, share] : a.winner_shares) {
      if (player >= 2) moved += share;
    }
    double dropped_max = 0.0;
    for (std::size_t j = 2; j < a.bids.size(); ++j) {
      dropped_max = std::max(dropped_max, a.bids[j]);
    }
    Atom b;
    b.p = a.p;
    // Each kept player's bid absorbs the dropped players' maximum. From
    // player 1's view the opponents' maximum was max(bid_0, dropped) and is
    // now exactly the new bid_0 (symmetrically for player 0), so deviation
    // payoffs are unchanged bid for bid, and the winning price, which is the
    // overall maximum, is unchanged too. Winner shares of dropped players
    // move to player 0; those atoms' price is the old maximum, which the new
    // bid_0 equals.
    b.bids = {std::max(a.bids[0], dropped_max), std::max(a.bids[1], dropped_max)};
    const double s0 = a.share_of(0) + moved;
    const double s1 = a.share_of(1);
    if (s0 > 0.0) b.winner_shares.push_back({0, s0});
    if (s1 > 0.0) b.winner_shares.push_back({1, s1});
    atoms.push_back(std::move(b));
  }
  FiniteEquilibrium out(merge_duplicate_atoms(std::move(atoms)));

  const OutcomeSummary before = summarize(instance, eq);
  const OutcomeSummary after = summarize(reduced, out);
  if (std::abs(before.revenue - after.revenue) > 1e-12) {
    throw InvariantViolation("reduction changed the revenue by " +
                             format_double(after.revenue - before.revenue));
  }
  for (int p = 0; p < 2; ++p) {
    if (after.utility[p] + 1e-9 < before.utility[p]) {
      throw InvariantViolation("reduction lowered a kept player's utility");
    }
  }
  return {std::move(reduced), std::move(out)};
}

AuctionEquilibrium discretize(const ContinuousEquilibrium& eq, int k) {
  if (k < 2) throw InvalidInput("grid needs at least two subdivisions");
  const PiecewiseCdf& cdf = eq.price_cdf();
  const double top = cdf.top();
  const int n = eq.instance().num_players();

  std::vector<double> grid =
      top > 0.0 ? uniform_grid(k, top) : std::vector<double>{0.0};
  // Accumulate per-cell winner mass in extended precision; cells can be
  // numerous and individually tiny.
  std::vector<std::vector<long double>> cell(
      grid.size(), std::vector<long double>(n, 0.0L));

  for (const SharePiece& piece : eq.share_pieces()) {
    for (const ReciprocalSegment& seg : cdf.segments()) {
      const double l = std::max(piece.lo, seg.lo);
      const double r = std::min(piece.hi, seg.hi);
      if (r <= l) continue;
      std::size_t j = cell_index(grid, l);
      double cur = l;
      while (cur < r) {
        const double next =
            j + 1 < grid.size() ? std::min(grid[j + 1], r) : r;
        const double mass = seg_mass(seg, cur, next);
        for (int p = 0; p < n; ++p) {
          cell[j][p] += static_cast<long double>(piece.shares[p] * mass);
        }
        cur = next;
        if (j + 1 < grid.size() && cur == grid[j + 1]) ++j;
      }
    }
  }
  for (std::size_t i = 0; i < cdf.atoms().size(); ++i) {
    const CdfAtom& a = cdf.atoms()[i];
    const std::vector<double>& sh = eq.atom_shares()[i].shares;
    const std::size_t j = cell_index(grid, a.x);
    for (int p = 0; p < n; ++p) {
      cell[j][p] += static_cast<long double>(sh[p] * a.mass);
    }
  }

  std::vector<Atom> atoms;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    long double total = 0.0L;
    for (int p = 0; p < n; ++p) total += cell[j][p];
    if (total <= 1e-15L) continue;
    Atom a;
    a.p = static_cast<double>(total);
    a.bids.assign(n, grid[j]);
    for (int p = 0; p < n; ++p) {
      const double share = static_cast<double>(cell[j][p] / total);
      if (share > 0.0) a.winner_shares.push_back({p, share});
    }
    atoms.push_back(std::move(a));
  }
  return {eq.instance(), FiniteEquilibrium(std::move(atoms))};
}

FiniteEquilibrium discretize(const FiniteEquilibrium& eq, int k, double top) {
  if (k < 2) throw InvalidInput("grid needs at least two subdivisions");
  if (!(top > 0.0)) throw InvalidInput("top must be positive");
  const std::vector<double> grid = uniform_grid(k, top);

  std::vector<Atom> atoms = eq.atoms();
  for (Atom& a : atoms) {
    for (double& bid : a.bids) {
      if (!(bid >= 0.0 && bid <= top)) {
        throw InvalidInput("bid " + format_double(bid) + " outside [0, top]");
      }
      bid = grid[cell_index(grid, bid)];
    }
  }
  return FiniteEquilibrium(merge_duplicate_atoms(std::move(atoms)));
}

}  // namespace aucteq
