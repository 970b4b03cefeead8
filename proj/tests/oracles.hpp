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
//
// Slow reference implementations the tests compare the production code
// against. Nothing here is linked into the library.

#ifndef AUCTEQ_TESTS_ORACLES_HPP_
#define AUCTEQ_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "aucteq/auction.hpp"
#include "aucteq/verify.hpp"

namespace aucteq::testing {

inline double simpson_half(const std::function<double(double)>& f, double a,
                           double b, double fa, double fm, double fb,
                           double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_half(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_half(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_half(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Exhaustive bid scan for the best constant deviation. The production
// verifier only evaluates the support candidates; under deviator-wins those
// dominate every real bid, which this scan checks.
inline double scan_best_deviation(const AuctionInstance& instance,
                                  const FiniteEquilibrium& eq, int player,
                                  TiePolicy policy, int points) {
  double top = 0.0;
  for (const Atom& a : eq.atoms()) top = std::max(top, a.max_bid());
  const double hi = top * 1.05 + 1e-3;
  double best = 0.0;  // bidding 0 and losing is always available
  for (int j = 0; j <= points; ++j) {
    const double d = hi * j / points;
    double utility = 0.0;
    for (const Atom& a : eq.atoms()) {
      double others = 0.0;
      for (int i = 0; i < instance.num_players(); ++i) {
        if (i != player) others = std::max(others, a.bids[i]);
      }
      const bool wins = policy == TiePolicy::kDeviatorWins ? d >= others
                                                           : d > others;
      if (wins) utility += a.p * (instance.value(player) - d);
    }
    best = std::max(best, utility);
  }
  return best;
}

// Gaussian elimination with partial pivoting; false on a singular system.
inline bool solve_square(std::vector<std::vector<double>> a,
                         std::vector<double> b, std::vector<double>* x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-11) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x->assign(n, 0.0);
  for (int i = 0; i < n; ++i) (*x)[i] = b[i] / a[i][i];
  return true;
}

struct ReferenceLpResult {
  bool feasible = false;
  double value = 0.0;
};

// Vertex enumeration for tiny LPs in the solver's own form:
//   minimize c.x  s.t.  ge.x >= ge_rhs, eq.x == eq_rhs, x >= 0.
// Every equality row is active at any feasible point; the remaining active
// set is chosen among inequality rows and variable bounds. Only valid when
// the feasible region is bounded (callers add a box row), so a feasible LP
// attains its minimum at some vertex.
inline ReferenceLpResult brute_force_lp_min(
    const std::vector<std::vector<double>>& ge, const std::vector<double>& ge_rhs,
    const std::vector<std::vector<double>>& eq, const std::vector<double>& eq_rhs,
    const std::vector<double>& c) {
  const int n = static_cast<int>(c.size());
  const int num_ge = static_cast<int>(ge.size());
  const int num_eq = static_cast<int>(eq.size());
  const int extra = n - num_eq;  // active rows to pick beyond the equalities
  ReferenceLpResult out;
  if (extra < 0) return out;

  std::vector<int> pick(extra);
  // Candidate active constraints: ge rows (id < num_ge) then bounds x_j >= 0.
  const int candidates = num_ge + n;
  std::function<void(int, int)> recurse = [&](int start, int depth) {
    if (depth == extra) {
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      for (int r = 0; r < num_eq; ++r) {
        a.push_back(eq[r]);
        b.push_back(eq_rhs[r]);
      }
      for (int id : pick) {
        if (id < num_ge) {
          a.push_back(ge[id]);
          b.push_back(ge_rhs[id]);
        } else {
          std::vector<double> row(n, 0.0);
          row[id - num_ge] = 1.0;
          a.push_back(std::move(row));
          b.push_back(0.0);
        }
      }
      std::vector<double> x;
      if (solve_square(a, b, &x)) {
        bool ok = true;
        for (double xi : x) ok = ok && xi >= -1e-8;
        for (int r = 0; r < num_ge && ok; ++r) {
          double dot = 0.0;
          for (int j = 0; j < n; ++j) dot += ge[r][j] * x[j];
          ok = dot >= ge_rhs[r] - 1e-8;
        }
        for (int r = 0; r < num_eq && ok; ++r) {
          double dot = 0.0;
          for (int j = 0; j < n; ++j) dot += eq[r][j] * x[j];
          ok = std::abs(dot - eq_rhs[r]) <= 1e-8;
        }
        if (ok) {
          double value = 0.0;
          for (int j = 0; j < n; ++j) value += c[j] * x[j];
          if (!out.feasible || value < out.value) {
            out.feasible = true;
            out.value = value;
          }
        }
      }
      return;
    }
    for (int id = start; id < candidates; ++id) {
      pick[depth] = id;
      recurse(id + 1, depth + 1);
    }
  };
  recurse(0, 0);
  return out;
}

}  // namespace aucteq::testing

#endif  // AUCTEQ_TESTS_ORACLES_HPP_
