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

#include "aucteq/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aucteq/errors.hpp"
#include "aucteq/numeric.hpp"

namespace aucteq {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr long kMaxIterations = 2000000;

struct Tableau {
  std::vector<std::vector<double>> rows;  // each ncols + 1 wide, rhs last
  std::vector<int> basis;                 // basic column per row
  std::vector<int> orig;                  // input row feeding each tableau row
  int ncols = 0;
};

void pivot(Tableau& t, int r, int c) {
  std::vector<double>& prow = t.rows[r];
  const double pv = prow[c];
  for (double& x : prow) x /= pv;
  prow[c] = 1.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(i) == r) continue;
    std::vector<double>& row = t.rows[i];
    const double f = row[c];
    if (f == 0.0) continue;
    for (int j = 0; j <= t.ncols; ++j) row[j] -= f * prow[j];
    row[c] = 0.0;
  }
  t.basis[r] = c;
}

// True when row i scaled by 1/ai precedes row l scaled by 1/al
// lexicographically. Rows of a feasible tableau are linearly independent, so
// some column always breaks the tie.
bool lex_less(const Tableau& t, int i, double ai, int l, double al) {
  for (int j = 0; j < t.ncols; ++j) {
    const double x = t.rows[i][j] / ai;
    const double y = t.rows[l][j] / al;
    if (x != y) return x < y;
  }
  return false;
}

// Entering column: most negative reduced cost. Leaving row: minimum ratio,
// exact ties resolved lexicographically, which rules out cycling under any
// entering rule and clears long degenerate stretches (these LPs start with
// every inequality tight). Columns with allow[j] == false never enter.
// Returns false when unbounded.
bool run_simplex(Tableau& t, const std::vector<double>& cost,
                 const std::vector<char>& allow, long& iterations) {
  const int m = static_cast<int>(t.rows.size());
  std::vector<char> is_basic(t.ncols, 0);
  for (int i = 0; i < m; ++i) is_basic[t.basis[i]] = 1;
  for (;;) {
    if (++iterations > kMaxIterations) {
      throw InvariantViolation("simplex iteration cap reached");
    }
    std::vector<double> y(m);
    bool any_cost = false;
    for (int i = 0; i < m; ++i) {
      y[i] = cost[t.basis[i]];
      any_cost = any_cost || y[i] != 0.0;
    }
    int enter = -1;
    double best_rc = -kPivotTol;
    for (int j = 0; j < t.ncols; ++j) {
      if (!allow[j] || is_basic[j]) continue;
      double rc = cost[j];
      if (any_cost) {
        for (int i = 0; i < m; ++i) {
          if (y[i] != 0.0) rc -= y[i] * t.rows[i][j];
        }
      }
      if (rc < best_rc) {
        best_rc = rc;
        enter = j;
      }
    }
    if (enter < 0) return true;

    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double a = t.rows[i][enter];
      if (a <= kPivotTol) continue;
      const double ratio = t.rows[i][t.ncols] / a;
      if (leave < 0 || ratio < best) {
        best = ratio;
        leave = i;
      } else if (ratio == best &&
                 lex_less(t, i, a, leave, t.rows[leave][enter])) {
        leave = i;
      }
    }
    if (leave < 0) return false;
    is_basic[t.basis[leave]] = 0;
    is_basic[enter] = 1;
    pivot(t, leave, enter);
  }
}

// Gaussian elimination with partial pivoting. Returns false when a pivot
// falls below 1e-12: the basis is numerically singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>* out) {
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    }
    if (std::abs(a[p][k]) < 1e-12) return false;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (int i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      if (f == 0.0) continue;
      for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  out->assign(n, 0.0);
  for (int k = n - 1; k >= 0; --k) {
    double s = b[k];
    for (int j = k + 1; j < n; ++j) s -= a[k][j] * (*out)[j];
    (*out)[k] = s / a[k][k];
  }
  return true;
}

double min_reduced_cost(const Tableau& t, const std::vector<double>& cost,
                        const std::vector<char>& allow) {
  const int m = static_cast<int>(t.rows.size());
  std::vector<char> is_basic(t.ncols, 0);
  for (int i = 0; i < m; ++i) is_basic[t.basis[i]] = 1;
  double out = 0.0;
  for (int j = 0; j < t.ncols; ++j) {
    if (!allow[j] || is_basic[j]) continue;
    double rc = cost[j];
    for (int i = 0; i < m; ++i) {
      const double cb = cost[t.basis[i]];
      if (cb != 0.0) rc -= cb * t.rows[i][j];
    }
    out = std::min(out, rc);
  }
  return out;
}

int winner_of(const AuctionInstance& instance, const BidProfile& bids) {
  return outcome(instance, bids).winner;
}

}  // namespace

BidGrid BidGrid::uniform(const AuctionInstance& instance, int k,
                         bool no_overbid) {
  if (k < 1) throw InvalidInput("grid needs at least one subdivision");
  const double top = instance.value(0);
  if (!(top > 0.0)) throw InvalidInput("top value must be positive");
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(k) + 1 + instance.num_players());
  for (int j = 0; j <= k; ++j) points.push_back(j * top / k);
  points[static_cast<std::size_t>(k)] = top;
  for (double v : instance.values()) points.push_back(v);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return BidGrid(std::move(points), instance, no_overbid);
}

BidGrid::BidGrid(std::vector<double> points, const AuctionInstance& instance,
                 bool no_overbid)
    : points_(std::move(points)), no_overbid_(no_overbid) {
  if (points_.empty()) throw InvalidInput("grid has no points");
  if (points_.front() != 0.0) throw InvalidInput("grid must contain 0");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (!(points_[i] < points_[i + 1])) {
      throw InvalidInput("grid points must be strictly increasing");
    }
  }
  if (!(points_.back() >= 0.0) || !std::isfinite(points_.back())) {
    throw InvalidInput("grid points must be finite");
  }
  if (no_overbid_) {
    for (double v : instance.values()) {
      if (v <= points_.back() &&
          !std::binary_search(points_.begin(), points_.end(), v)) {
        throw InvalidInput(
            "no-overbid grid must contain every player value below its top");
      }
    }
  }
  admissible_.resize(instance.num_players());
  for (int i = 0; i < instance.num_players(); ++i) {
    for (double p : points_) {
      if (!no_overbid_ || p <= instance.value(i)) admissible_[i].push_back(p);
    }
  }
}

namespace {

struct ProfileTable {
  std::vector<BidProfile> profiles;
  std::vector<std::vector<double>> utility;     // [var][player]
  std::vector<std::vector<double>> max_others;  // [var][player]
  std::vector<double> objective;                // per var
};

ProfileTable enumerate_profiles(const AuctionInstance& instance,
                                const BidGrid& grid, LpObjective objective) {
  const int n = instance.num_players();
  if (n > 3) {
    throw InvalidInput(
        "profile enumeration is limited to three players (count grows "
        "exponentially)");
  }
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) count *= grid.admissible(i).size();

  ProfileTable table;
  table.profiles.reserve(count);
  table.utility.reserve(count);
  table.max_others.reserve(count);
  table.objective.reserve(count);

  BidProfile bids(n, 0.0);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t v = 0; v < count; ++v) {
    for (int i = 0; i < n; ++i) bids[i] = grid.admissible(i)[idx[i]];
    const Outcome o = outcome(instance, bids);
    std::vector<double> u(n, 0.0);
    u[o.winner] = instance.value(o.winner) - o.price;
    std::vector<double> mo(n, 0.0);
    for (int i = 0; i < n; ++i) {
      double m = 0.0;
      bool first = true;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (first || bids[j] > m) m = bids[j];
        first = false;
      }
      mo[i] = m;
    }
    table.profiles.push_back(bids);
    table.utility.push_back(std::move(u));
    table.max_others.push_back(std::move(mo));
    table.objective.push_back(objective == LpObjective::kWelfare
                                  ? instance.value(o.winner)
                                  : o.price);
    // advance mixed-radix counter, last player fastest
    for (int i = n - 1; i >= 0; --i) {
      if (++idx[i] < grid.admissible(i).size()) break;
      idx[i] = 0;
    }
  }
  return table;
}

}  // namespace

LpProblem build_cce_lp(const AuctionInstance& instance, const BidGrid& grid,
                       LpObjective objective, LpDirection direction) {
  ProfileTable table = enumerate_profiles(instance, grid, objective);
  const int n = instance.num_players();
  const std::size_t num_vars = table.profiles.size();

  LpProblem problem;
  problem.num_vars = static_cast<int>(num_vars);
  problem.objective = std::move(table.objective);
  problem.direction = direction;
  problem.profiles = std::move(table.profiles);
  for (int i = 0; i < n; ++i) {
    for (double d : grid.points()) {
      std::vector<double> row(num_vars);
      for (std::size_t v = 0; v < num_vars; ++v) {
        const double dev = d >= table.max_others[v][i]
                               ? instance.value(i) - d
                               : 0.0;
        row[v] = table.utility[v][i] - dev;
      }
      problem.rows.push_back(std::move(row));
      problem.row_info.push_back({i, d, false, 0.0});
    }
  }
  return problem;
}

LpProblem build_ce_lp(const AuctionInstance& instance, const BidGrid& grid,
                      LpObjective objective, LpDirection direction) {
  ProfileTable table = enumerate_profiles(instance, grid, objective);
  const int n = instance.num_players();
  const std::size_t num_vars = table.profiles.size();

  LpProblem problem;
  problem.num_vars = static_cast<int>(num_vars);
  problem.objective = std::move(table.objective);
  problem.direction = direction;
  problem.profiles = std::move(table.profiles);
  for (int i = 0; i < n; ++i) {
    for (double r : grid.admissible(i)) {
      for (double d : grid.points()) {
        std::vector<double> row(num_vars, 0.0);
        for (std::size_t v = 0; v < num_vars; ++v) {
          if (problem.profiles[v][i] != r) continue;
          const double dev = d >= table.max_others[v][i]
                                 ? instance.value(i) - d
                                 : 0.0;
          row[v] = table.utility[v][i] - dev;
        }
        problem.rows.push_back(std::move(row));
        problem.row_info.push_back({i, d, true, r});
      }
    }
  }
  return problem;
}

LpSolution solve_lp(const LpProblem& problem) {
  DenseLp dense;
  dense.ge = problem.rows;
  dense.ge_rhs.assign(problem.rows.size(), 0.0);
  dense.eq.push_back(std::vector<double>(problem.num_vars, 1.0));
  dense.eq_rhs.push_back(1.0);
  dense.c = problem.objective;
  if (problem.direction == LpDirection::kMaximize) {
    for (double& v : dense.c) v = -v;
  }
  LpSolution sol = solve_dense(dense);
  if (sol.status == LpStatus::kOptimal &&
      problem.direction == LpDirection::kMaximize) {
    sol.objective = -sol.objective;
  }
  return sol;
}

namespace {

double primal_residual(const DenseLp& lp, const std::vector<double>& x) {
  const int nx = static_cast<int>(lp.c.size());
  double resid = 0.0;
  for (std::size_t i = 0; i < lp.ge.size(); ++i) {
    double lhs = 0.0;
    for (int j = 0; j < nx; ++j) lhs += lp.ge[i][j] * x[j];
    resid = std::max(resid, lp.ge_rhs[i] - lhs);
  }
  for (std::size_t i = 0; i < lp.eq.size(); ++i) {
    double lhs = 0.0;
    for (int j = 0; j < nx; ++j) lhs += lp.eq[i][j] * x[j];
    resid = std::max(resid, std::abs(lhs - lp.eq_rhs[i]));
  }
  for (double xj : x) resid = std::max(resid, -xj);
  return resid;
}

// Two-phase simplex on the given rows. When ge_duals is non-null and the
// solve ends optimal, it receives one multiplier per inequality row: the
// reduced cost of that row's slack or surplus column, which equals the
// inequality's dual value under either stored orientation.
LpSolution solve_primal(const DenseLp& lp, std::vector<double>* ge_duals) {
  const int nx = static_cast<int>(lp.c.size());
  for (const auto& row : lp.ge) {
    if (static_cast<int>(row.size()) != nx) {
      throw InvalidInput("inequality row width differs from the objective");
    }
  }
  for (const auto& row : lp.eq) {
    if (static_cast<int>(row.size()) != nx) {
      throw InvalidInput("equality row width differs from the objective");
    }
  }
  const int n_ge = static_cast<int>(lp.ge.size());
  const int n_eq = static_cast<int>(lp.eq.size());
  const int m = n_ge + n_eq;

  // Columns: structural, one slack or surplus per inequality, artificials
  // where the slack basis is infeasible (positive inequality rhs, any
  // equality). Inequalities with rhs <= 0 are negated so their slack starts
  // basic and feasible.
  int n_art = n_eq;
  for (double r : lp.ge_rhs) {
    if (r > 0.0) ++n_art;
  }
  Tableau t;
  t.ncols = nx + n_ge + n_art;
  t.rows.assign(m, std::vector<double>(t.ncols + 1, 0.0));
  t.basis.assign(m, -1);
  t.orig.resize(m);
  for (int i = 0; i < m; ++i) t.orig[i] = i;

  int art = nx + n_ge;
  for (int i = 0; i < n_ge; ++i) {
    const bool flip = lp.ge_rhs[i] <= 0.0;
    const double sign = flip ? -1.0 : 1.0;
    for (int j = 0; j < nx; ++j) t.rows[i][j] = sign * lp.ge[i][j];
    t.rows[i][t.ncols] = sign * lp.ge_rhs[i];
    t.rows[i][nx + i] = flip ? 1.0 : -1.0;  // slack vs surplus
    if (flip) {
      t.basis[i] = nx + i;
    } else {
      t.rows[i][art] = 1.0;
      t.basis[i] = art++;
    }
  }
  for (int i = 0; i < n_eq; ++i) {
    const double sign = lp.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
    const int r = n_ge + i;
    for (int j = 0; j < nx; ++j) t.rows[r][j] = sign * lp.eq[i][j];
    t.rows[r][t.ncols] = sign * lp.eq_rhs[i];
    t.rows[r][art] = 1.0;
    t.basis[r] = art++;
  }

  // Pristine copy: pivoting accumulates rounding, so the accepted basis is
  // re-solved against this untouched data at the end.
  const std::vector<std::vector<double>> init = t.rows;

  LpSolution sol;
  const int first_art = nx + n_ge;
  std::vector<char> allow_all(t.ncols, 1);
  std::vector<char> allow_real(t.ncols, 1);
  for (int j = first_art; j < t.ncols; ++j) allow_real[j] = 0;

  if (n_art > 0) {
    std::vector<double> phase1(t.ncols, 0.0);
    for (int j = first_art; j < t.ncols; ++j) phase1[j] = 1.0;
    run_simplex(t, phase1, allow_all, sol.iterations);
    double infeas = 0.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basis[i] >= first_art) infeas += t.rows[i][t.ncols];
    }
    if (infeas > 1e-9) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Degenerate artificials: pivot them onto a real column, or drop the
    // (redundant) row so they cannot re-enter during phase 2.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_art; ++j) {
        if (std::abs(t.rows[i][j]) > 1e-7) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(t, static_cast<int>(i), col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        t.orig.erase(t.orig.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<double> cost(t.ncols, 0.0);
  for (int j = 0; j < nx; ++j) cost[j] = lp.c[j];
  if (!run_simplex(t, cost, allow_real, sol.iterations)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.x.assign(nx, 0.0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < nx) sol.x[t.basis[i]] = t.rows[i][t.ncols];
  }

  // Re-solve the accepted basis against the pristine rows and keep the
  // result when it is at least as feasible as the pivoted values.
  {
    const int mb = static_cast<int>(t.rows.size());
    std::vector<std::vector<double>> bmat(mb, std::vector<double>(mb, 0.0));
    std::vector<double> brhs(mb, 0.0);
    for (int r = 0; r < mb; ++r) {
      for (int k = 0; k < mb; ++k) bmat[r][k] = init[t.orig[r]][t.basis[k]];
      brhs[r] = init[t.orig[r]][t.ncols];
    }
    std::vector<double> z;
    if (solve_linear(std::move(bmat), std::move(brhs), &z)) {
      std::vector<double> refined(nx, 0.0);
      for (int k = 0; k < mb; ++k) {
        if (t.basis[k] < nx) refined[t.basis[k]] = z[k];
      }
      if (primal_residual(lp, refined) <= primal_residual(lp, sol.x)) {
        sol.x = std::move(refined);
      }
    }
  }

  if (ge_duals != nullptr) {
    ge_duals->assign(n_ge, 0.0);
    for (int i = 0; i < n_ge; ++i) {
      double rc = 0.0;
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const double cb = cost[t.basis[r]];
        if (cb != 0.0) rc -= cb * t.rows[r][nx + i];
      }
      (*ge_duals)[i] = rc;
    }
  }

  sol.objective = 0.0;
  for (int j = 0; j < nx; ++j) sol.objective += lp.c[j] * sol.x[j];
  sol.certificate.min_reduced_cost = min_reduced_cost(t, cost, allow_real);
  sol.certificate.max_primal_residual = primal_residual(lp, sol.x);
  return sol;
}

}  // namespace

LpSolution solve_dense(const DenseLp& lp) {
  const int nx = static_cast<int>(lp.c.size());
  const int n_ge = static_cast<int>(lp.ge.size());

  // Tall distribution problems (rows >> vars, every inequality tight at the
  // start) stall the primal for thousands of degenerate pivots. Their dual
  // is wide and starts feasible at the slack basis, so solve that instead:
  //   max y0  s.t.  sum_i u_i ge[i][j] + y0 <= c[j], u >= 0, y0 free,
  // and read the optimal distribution off the dual's row multipliers. Any
  // numerical doubt about the recovered point falls back to the primal.
  const bool distribution_shape = [&] {
    if (lp.eq.size() != 1 || lp.eq_rhs[0] != 1.0 || n_ge <= nx) return false;
    for (double v : lp.eq[0]) {
      if (v != 1.0) return false;
    }
    for (double r : lp.ge_rhs) {
      if (r != 0.0) return false;
    }
    return true;
  }();
  if (!distribution_shape) return solve_primal(lp, nullptr);

  DenseLp dual;
  dual.c.assign(n_ge + 2, 0.0);
  dual.c[n_ge] = -1.0;      // y0+
  dual.c[n_ge + 1] = 1.0;   // y0-
  dual.ge.assign(nx, std::vector<double>(n_ge + 2, 0.0));
  dual.ge_rhs.assign(nx, 0.0);
  for (int j = 0; j < nx; ++j) {
    for (int i = 0; i < n_ge; ++i) dual.ge[j][i] = -lp.ge[i][j];
    dual.ge[j][n_ge] = -1.0;
    dual.ge[j][n_ge + 1] = 1.0;
    dual.ge_rhs[j] = -lp.c[j];
  }

  std::vector<double> multipliers;
  LpSolution ds = solve_primal(dual, &multipliers);
  if (ds.status == LpStatus::kUnbounded) {
    // Unbounded dual certifies an empty distribution polytope.
    LpSolution sol;
    sol.status = LpStatus::kInfeasible;
    sol.iterations = ds.iterations;
    return sol;
  }
  if (ds.status == LpStatus::kOptimal) {
    const double y0 = ds.x[n_ge] - ds.x[n_ge + 1];
    std::vector<double> x(multipliers.begin(), multipliers.end());
    bool usable = true;
    double value = 0.0;
    for (int j = 0; j < nx; ++j) {
      if (x[j] < 0.0) {
        usable = usable && x[j] >= -1e-12;
        x[j] = 0.0;
      }
      value += lp.c[j] * x[j];
    }
    const double resid = primal_residual(lp, x);
    const double gap = std::abs(value - y0);
    if (usable && resid <= 1e-9 && gap <= 1e-7 * std::max(1.0, std::abs(y0))) {
      LpSolution sol;
      sol.status = LpStatus::kOptimal;
      sol.x = std::move(x);
      sol.objective = value;
      sol.iterations = ds.iterations;
      sol.certificate.max_primal_residual = resid;
      double min_rc = 0.0;
      for (int j = 0; j < nx; ++j) {
        double rc = lp.c[j] - y0;
        for (int i = 0; i < n_ge; ++i) rc -= ds.x[i] * lp.ge[i][j];
        min_rc = std::min(min_rc, rc);
      }
      sol.certificate.min_reduced_cost = min_rc;
      return sol;
    }
  }
  return solve_primal(lp, nullptr);
}

ExtremalResult extremal_equilibrium(const AuctionInstance& instance,
                                    const BidGrid& grid, EquilibriumClass cls,
                                    LpObjective objective,
                                    LpDirection direction) {
  const LpProblem problem = cls == EquilibriumClass::kCce
                                ? build_cce_lp(instance, grid, objective, direction)
                                : build_ce_lp(instance, grid, objective, direction);
  LpSolution sol = solve_lp(problem);
  if (sol.status != LpStatus::kOptimal) {
    throw ConstructionError(
        sol.status == LpStatus::kInfeasible
            ? "no equilibrium is supported on this grid"
            : "equilibrium polytope is unbounded; malformed problem");
  }

  std::vector<Atom> atoms;
  double total = 0.0;
  for (int v = 0; v < problem.num_vars; ++v) {
    if (sol.x[v] > 1e-11) total += sol.x[v];
  }
  for (int v = 0; v < problem.num_vars; ++v) {
    if (sol.x[v] <= 1e-11) continue;
    Atom a;
    a.p = sol.x[v] / total;
    a.bids = problem.profiles[v];
    a.winner_shares.push_back({winner_of(instance, a.bids), 1.0});
    atoms.push_back(std::move(a));
  }
  FiniteEquilibrium dist(merge_duplicate_atoms(std::move(atoms)));

  VerificationReport report =
      cls == EquilibriumClass::kCce
          ? verify_cce(instance, dist, 1e-7, TiePolicy::kDeviatorWins)
          : verify_ce(instance, dist, 1e-7, TiePolicy::kDeviatorWins);
  if (!report.pass) {
    throw InvariantViolation(
        "LP optimum failed verification; max regret " +
        format_double(report.max_regret));
  }
  return {AuctionEquilibrium{instance, std::move(dist)}, sol.objective,
          std::move(sol), std::move(report)};
}

}  // namespace aucteq
