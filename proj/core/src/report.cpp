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

#include "aucteq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "aucteq/auction.hpp"
#include "aucteq/bounds.hpp"
#include "aucteq/construct.hpp"
#include "aucteq/learning.hpp"
#include "aucteq/lp.hpp"
#include "aucteq/numeric.hpp"
#include "aucteq/piecewise_cdf.hpp"
#include "aucteq/verify.hpp"

namespace aucteq {
namespace {

// Stand-in for an unbounded interval end; format_acceptance_report prints it
// as inf.
constexpr double kNoBound = 1e300;

ComparisonRow make_row(std::string label, double computed, double lo,
                       double hi, std::string source) {
  ComparisonRow r;
  r.label = std::move(label);
  r.computed = computed;
  r.lo = lo;
  r.hi = hi;
  r.source = std::move(source);
  r.pass = std::isfinite(computed) && computed >= lo && computed <= hi;
  return r;
}

ComparisonRow at_most(std::string label, double computed, double hi,
                      std::string source) {
  return make_row(std::move(label), computed, -kNoBound, hi,
                  std::move(source));
}

ComparisonRow at_least(std::string label, double computed, double lo,
                       std::string source) {
  return make_row(std::move(label), computed, lo, kNoBound,
                  std::move(source));
}

CriterionResult collect(std::string name, std::string detail,
                        std::vector<ComparisonRow> rows) {
  CriterionResult out;
  out.name = std::move(name);
  out.detail = std::move(detail);
  out.rows = std::move(rows);
  out.pass = std::all_of(out.rows.begin(), out.rows.end(),
                         [](const ComparisonRow& r) { return r.pass; });
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8g", x);
  return buf;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

double simpson_recurse(const std::function<double(double)>& f, double a,
                       double b, double fa, double fm, double fb, double whole,
                       double tol, int depth) {
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
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Adaptive Simpson quadrature, used here only to cross-check closed forms.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 48);
}

CriterionResult welfare_floor() {
  const BoundResult best = minimize_welfare();
  std::vector<ComparisonRow> rows;
  rows.push_back(make_row("minimum worst-case welfare", best.value,
                          0.813559 - 1e-5, 0.813559 + 1e-5, "closed form"));
  rows.push_back(make_row("minimizing alpha", best.arg("alpha"),
                          0.274322 - 1e-4, 0.274322 + 1e-4, "closed form"));
  rows.push_back(at_most("stationarity residual", std::abs(best.residual),
                         1e-9, "closed form"));
  return collect("welfare-floor",
                 "welfare " + num(best.value) + " at alpha " +
                     num(best.arg("alpha")),
                 std::move(rows));
}

CriterionResult single_segment_curve() {
  const BoundResult best = minimize_welfare();
  const double a0 = best.arg("single_alpha");
  std::vector<ComparisonRow> rows;
  rows.push_back(make_row("root of 2a - ln(a) - 2", a0, 0.203 - 1e-3,
                          0.203 + 1e-3, "closed form"));
  rows.push_back(at_most("root residual", std::abs(2.0 * a0 - std::log(a0) - 2.0),
                         1e-9, "closed form"));
  rows.push_back(make_row("curve welfare at the root",
                          best.arg("single_welfare"), 0.838 - 1e-3,
                          0.838 + 1e-3, "closed form"));
  return collect("single-segment-curve",
                 "curve minimum " + num(best.arg("single_welfare")) +
                     " at alpha " + num(a0),
                 std::move(rows));
}

CriterionResult worst_welfare_construction() {
  const double alpha = minimize_welfare().arg("alpha");
  const ContinuousEquilibrium ce = construct_worst_welfare(alpha);
  const OutcomeSummary s = summarize(ce);
  const PiecewiseCdf& cdf = ce.price_cdf();
  std::vector<ComparisonRow> rows;
  rows.push_back(make_row("construction welfare", s.welfare, 0.813559 - 1e-6,
                          0.813559 + 1e-6, "construction"));
  double worst_slack = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double slack =
        cdf.sup_deviation_utility(ce.instance().value(i)) - s.utility[i];
    worst_slack = std::max(worst_slack, slack);
    rows.push_back(at_most(
        "sup-deviation slack, player " + std::to_string(i + 1), slack, 1e-9,
        "construction"));
  }
  rows.push_back(at_most("support top above the low value",
                         cdf.top() - ce.instance().value(1), 1e-12,
                         "construction"));
  const AuctionEquilibrium grid = discretize(ce, 200);
  const VerificationReport loses =
      verify_cce(grid, 0.01, TiePolicy::kDeviatorLoses);
  const VerificationReport wins =
      verify_cce(grid, 0.01, TiePolicy::kDeviatorWins);
  rows.push_back(at_most("discretized regret (k=200, deviator-loses)",
                         loses.max_regret, 0.01, "construction"));
  rows.push_back(at_most("discretized regret (k=200, deviator-wins)",
                         wins.max_regret, 0.01, "construction"));
  return collect("worst-welfare-construction",
                 "welfare " + num(s.welfare) + ", max deviation slack " +
                     num(worst_slack),
                 std::move(rows));
}

CriterionResult utility_bounds_window() {
  double min_low_slack = kNoBound;
  double min_high_slack = kNoBound;
  double max_umin = -kNoBound;
  double min_umax = kNoBound;
  for (int i = 0; i <= 10; ++i) {
    const double alpha = 0.27 + 1e-3 * i;
    const UtilityBounds ub = u_bounds(alpha);
    min_low_slack = std::min(min_low_slack, alpha - ub.u_min);
    min_high_slack = std::min(min_high_slack, ub.u_max - alpha);
    max_umin = std::max(max_umin, ub.u_min);
    min_umax = std::min(min_umax, ub.u_max);
  }
  std::vector<ComparisonRow> rows;
  rows.push_back(at_least("min of alpha - u_min over [0.27, 0.28]",
                          min_low_slack, 0.0, "closed form"));
  rows.push_back(at_least("min of u_max - alpha over [0.27, 0.28]",
                          min_high_slack, 0.0, "closed form"));
  rows.push_back(at_most("max u_min over [0.27, 0.28]", max_umin, 0.12,
                         "closed form"));
  rows.push_back(at_least("min u_max over [0.27, 0.28]", min_umax, 0.285,
                          "closed form"));
  return collect("utility-bounds-window",
                 "u_min <= alpha <= u_max on 11 samples; u_min <= " +
                     num(max_umin) + ", u_max >= " + num(min_umax),
                 std::move(rows));
}

CriterionResult symmetric_revenue_constructions() {
  const ContinuousEquilibrium two = construct_symmetric_worst_revenue(2, 1.0);
  const OutcomeSummary s = summarize(two);
  const double inv_e = 1.0 / std::numbers::e;
  std::vector<ComparisonRow> rows;
  rows.push_back(make_row("two-player revenue", s.revenue,
                          revenue_floor() - 1e-9, revenue_floor() + 1e-9,
                          "construction"));
  rows.push_back(make_row("player 1 utility", s.utility[0], inv_e - 1e-9,
                          inv_e + 1e-9, "construction"));
  rows.push_back(make_row("player 2 utility", s.utility[1], inv_e - 1e-9,
                          inv_e + 1e-9, "construction"));
  for (int n = 2; n <= 4; ++n) {
    const AuctionEquilibrium grid =
        discretize(construct_symmetric_worst_revenue(n, 1.0), 200);
    const double rev = summarize(grid.instance, grid.distribution).revenue;
    const double bound = symmetric_revenue_bound(n, 1.0);
    rows.push_back(make_row(
        "discretized revenue minus bound, n=" + std::to_string(n),
        rev - bound, -0.01, 0.01, "construction"));
  }
  return collect("symmetric-revenue-constructions",
                 "revenue " + num(s.revenue) + ", utilities " +
                     num(s.utility[0]) + " and " + num(s.utility[1]),
                 std::move(rows));
}

CriterionResult table1_example() {
  const AuctionEquilibrium eq = construct_table1(1e-4);
  const OutcomeSummary s = summarize(eq.instance, eq.distribution);
  const VerificationReport cce =
      verify_cce(eq, 5e-3, TiePolicy::kDeviatorLoses);
  const VerificationReport ce = verify_ce(eq, 5e-3, TiePolicy::kDeviatorLoses);
  std::vector<ComparisonRow> rows;
  rows.push_back(at_most("constant-deviation regret (deviator-loses)",
                         cce.max_regret, 5e-3, "verifier"));
  rows.push_back(make_row("high-value utility", s.utility[0], 1.016 - 2e-3,
                          1.016 + 2e-3, "construction"));
  rows.push_back(make_row("low-value utility", s.utility[1], 0.038 - 2e-3,
                          0.038 + 2e-3, "construction"));
  // The same distribution must not survive recommendation-conditioned
  // deviations: the low player, told to bid just under 0.5, gains about 0.2
  // by bidding just under 0.8 instead.
  rows.push_back(at_least("conditional regret (deviator-loses)",
                          ce.max_regret, 0.1, "verifier"));
  return collect("table1-example",
                 "constant-deviation regret " + num(cce.max_regret) +
                     ", conditional regret " + num(ce.max_regret),
                 std::move(rows));
}

std::string values_tag(const AuctionInstance& inst, int k) {
  std::string out = "values (";
  for (int i = 0; i < inst.num_players(); ++i) {
    if (i > 0) out += ", ";
    out += num(inst.value(i));
  }
  out += "), k=" + std::to_string(k);
  return out;
}

CriterionResult ce_lp_support_bounds() {
  std::vector<ComparisonRow> rows;
  for (const std::vector<double>& values :
       {std::vector<double>{2.0, 1.0}, std::vector<double>{1.0, 1.0}}) {
    const AuctionInstance inst(values);
    for (int k : {10, 20}) {
      const BidGrid grid = BidGrid::uniform(inst, k, false);
      const ExtremalResult low_welfare =
          extremal_equilibrium(inst, grid, EquilibriumClass::kCe,
                               LpObjective::kWelfare, LpDirection::kMinimize);
      const ExtremalResult low_revenue =
          extremal_equilibrium(inst, grid, EquilibriumClass::kCe,
                               LpObjective::kRevenue, LpDirection::kMinimize);
      const std::string tag = values_tag(inst, k);
      rows.push_back(make_row("min welfare, " + tag, low_welfare.value,
                              inst.value(0) - 1e-9, inst.value(0) + 1e-9,
                              "LP"));
      rows.push_back(at_least("min revenue, " + tag, low_revenue.value,
                              inst.value(1) - 1e-9, "LP"));
      const CharacterizationReport cw = check_ce_characterization(
          inst, low_welfare.equilibrium.distribution, 1e-7);
      const CharacterizationReport cr = check_ce_characterization(
          inst, low_revenue.equilibrium.distribution, 1e-7);
      rows.push_back(at_most(
          "outcome-shape violations at min welfare, " + tag,
          static_cast<double>(cw.violations.size()), 0.0, "verifier"));
      rows.push_back(at_most(
          "outcome-shape violations at min revenue, " + tag,
          static_cast<double>(cr.violations.size()), 0.0, "verifier"));
    }
  }
  return collect("ce-lp-support-bounds",
                 "conditional-deviation extremes stay efficient with price "
                 "at least the low value",
                 std::move(rows));
}

CriterionResult cce_lp_brackets() {
  const double alpha = minimize_welfare().arg("alpha");
  const AuctionInstance low({1.0, 1.0 - alpha});
  const AuctionInstance ones({1.0, 1.0});
  std::vector<ComparisonRow> rows;
  const ExtremalResult no_overbid =
      extremal_equilibrium(low, BidGrid::uniform(low, 40, true),
                           EquilibriumClass::kCce, LpObjective::kWelfare,
                           LpDirection::kMinimize);
  rows.push_back(make_row("min welfare, no overbidding, k=40",
                          no_overbid.value, 0.813559 - 1e-6, 0.84, "LP"));
  const ExtremalResult min_rev =
      extremal_equilibrium(ones, BidGrid::uniform(ones, 40, true),
                           EquilibriumClass::kCce, LpObjective::kRevenue,
                           LpDirection::kMinimize);
  rows.push_back(make_row("min revenue, equal values, k=40", min_rev.value,
                          revenue_floor() - 1e-6, 0.295, "LP"));
  const ExtremalResult overbid =
      extremal_equilibrium(low, BidGrid::uniform(low, 40, false),
                           EquilibriumClass::kCce, LpObjective::kWelfare,
                           LpDirection::kMinimize);
  rows.push_back(make_row("min welfare, overbidding allowed, k=40",
                          overbid.value, 1.0 - 1.0 / std::numbers::e - 1e-6,
                          0.8136, "LP"));
  return collect("cce-lp-brackets",
                 "min welfare " + num(no_overbid.value) +
                     " (no overbid), min revenue " + num(min_rev.value) +
                     ", min welfare " + num(overbid.value) + " (overbid)",
                 std::move(rows));
}

CriterionResult three_player_reduction() {
  std::mt19937_64 rng(20260814ull);
  double max_rev_shift = 0.0;
  double min_utility_change = kNoBound;
  double worst_regret = 0.0;
  int completed = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const double v2 = uniform_in(rng, 0.3, 0.95);
    const double v3 = uniform_in(rng, 0.1, v2);
    const AuctionInstance inst({1.0, v2, v3});
    const int k = 4 + static_cast<int>(rng() % 5);
    const BidGrid grid = BidGrid::uniform(inst, k, true);
    const LpObjective objective =
        (rep % 2 == 0) ? LpObjective::kWelfare : LpObjective::kRevenue;
    const LpDirection direction =
        (rep % 4 < 2) ? LpDirection::kMinimize : LpDirection::kMaximize;
    const ExtremalResult found = extremal_equilibrium(
        inst, grid, EquilibriumClass::kCce, objective, direction);
    const AuctionEquilibrium reduced =
        reduce_to_two(inst, found.equilibrium.distribution);
    const OutcomeSummary before =
        summarize(inst, found.equilibrium.distribution);
    const OutcomeSummary after =
        summarize(reduced.instance, reduced.distribution);
    max_rev_shift =
        std::max(max_rev_shift, std::abs(after.revenue - before.revenue));
    for (int i = 0; i < 2; ++i) {
      min_utility_change =
          std::min(min_utility_change, after.utility[i] - before.utility[i]);
    }
    const VerificationReport vr =
        verify_cce(reduced, 1e-7, TiePolicy::kDeviatorWins);
    worst_regret = std::max(worst_regret, vr.max_regret);
    ++completed;
  }
  std::vector<ComparisonRow> rows;
  rows.push_back(make_row("reductions completed",
                          static_cast<double>(completed), 20.0, 20.0, "LP"));
  rows.push_back(at_most("max |revenue shift|", max_rev_shift, 1e-12,
                         "construction"));
  rows.push_back(at_least("min kept-player utility change",
                          min_utility_change, -1e-9, "construction"));
  rows.push_back(at_most("max regret after reduction (deviator-wins)",
                         worst_regret, 1e-7, "verifier"));
  return collect("three-player-reduction",
                 "20 reductions, max revenue shift " + num(max_rev_shift) +
                     ", max regret " + num(worst_regret),
                 std::move(rows));
}

CriterionResult revenue_vs_gap_monotonicity() {
  std::vector<ComparisonRow> rows;
  const std::vector<double> highs = {1.0, 2.0, 5.0, 10.0};
  std::vector<double> min_revenue;
  for (double v : highs) {
    const AuctionInstance inst({v, 1.0});
    const ExtremalResult r =
        extremal_equilibrium(inst, BidGrid::uniform(inst, 40, true),
                             EquilibriumClass::kCce, LpObjective::kRevenue,
                             LpDirection::kMinimize);
    min_revenue.push_back(r.value);
  }
  for (std::size_t i = 1; i < highs.size(); ++i) {
    rows.push_back(at_least("min revenue step, v=" + num(highs[i - 1]) +
                                " to v=" + num(highs[i]),
                            min_revenue[i] - min_revenue[i - 1], -1e-9, "LP"));
  }
  for (double eps : {0.5, 0.2, 0.1}) {
    const double expected = 324.0 / (eps * eps * eps * eps);
    rows.push_back(make_row("value gap threshold at eps=" + num(eps),
                            gap_threshold(eps), expected * (1.0 - 1e-12),
                            expected * (1.0 + 1e-12), "closed form"));
  }
  std::string trend;
  for (std::size_t i = 0; i < min_revenue.size(); ++i) {
    if (i > 0) trend += " <= ";
    trend += num(min_revenue[i]);
  }
  return collect("revenue-vs-gap-monotonicity", "min revenue " + trend,
                 std::move(rows));
}

CriterionResult property_suites() {
  std::vector<ComparisonRow> rows;
  {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double b = uniform_in(rng, 0.5, 5.0);
      const double a = b * uniform_in(rng, 0.02, 0.98);
      const PiecewiseCdf cdf({{0.0, a / b}}, {{a, b, 0.0, b - a}}, b - a);
      const double oracle = integrate(
          [&](double x) { return 1.0 - cdf.eval(x); }, 0.0, b - a, 1e-11);
      worst = std::max(worst, std::abs(cdf.expected_value() - oracle));
    }
    rows.push_back(at_most(
        "max |closed-form mean - quadrature| over 100 envelopes", worst, 1e-8,
        "closed form"));
  }
  {
    std::mt19937_64 rng(202);
    double worst = kNoBound;
    const double inv_e = 1.0 / std::numbers::e;
    for (int i = 0; i < 100; ++i) {
      const double alpha = inv_e + uniform_in(rng, 1e-3, 1.0) * (1.0 - inv_e);
      const double v = uniform_in(rng, 1.0, 10.0);
      worst = std::min(worst, revenue_lb_rhs(alpha, v) - (1.0 - 2.0 * alpha));
    }
    rows.push_back(at_least("min margin of the revenue bound over 1 - 2*alpha",
                            worst, 0.0, "closed form"));
  }
  {
    std::mt19937_64 rng(303);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double alpha = uniform_in(rng, 0.05, 0.9);
      const double v = uniform_in(rng, 0.2, 0.95);
      const double boundary = v * alpha;
      const double above = welfare_lb(alpha, boundary, v);
      const double below = welfare_lb(alpha, boundary * (1.0 - 1e-12), v);
      worst = std::max(worst, std::abs(above - below));
    }
    rows.push_back(at_most("max branch mismatch at the envelope boundary",
                           worst, 1e-9, "closed form"));
  }
  {
    const AuctionInstance inst({1.0, 0.75});
    const BidGrid grid = BidGrid::uniform(inst, 20, true);
    double worst_regret = 0.0;
    double min_slack = kNoBound;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      LearnerConfig config;
      config.algorithm = LearnerAlgorithm::kRegretMatching;
      config.rounds = 100000;
      config.seed = seed;
      const SimResult sim = run_no_regret(inst, grid, config);
      const double tol = sim.eps() + 1e-9;
      const VerificationReport vr = verify_cce(
          AuctionEquilibrium(inst, sim.empirical), tol,
          TiePolicy::kDeviatorWins);
      worst_regret = std::max(worst_regret, sim.eps());
      min_slack = std::min(min_slack, tol - vr.max_regret);
    }
    rows.push_back(at_least(
        "min verification slack at tolerance = measured regret", min_slack,
        0.0, "simulation"));
    rows.push_back(at_most("max average regret across seeds 1-10",
                           worst_regret, 0.05, "simulation"));
  }
  return collect("property-suites",
                 "quadrature agreement, revenue-bound margin, envelope "
                 "continuity, regret-matching verification",
                 std::move(rows));
}

struct SuiteItem {
  const char* name;
  bool slow;
  CriterionResult (*fn)();
};

constexpr SuiteItem kSuite[] = {
    {"welfare-floor", false, welfare_floor},
    {"single-segment-curve", false, single_segment_curve},
    {"worst-welfare-construction", false, worst_welfare_construction},
    {"utility-bounds-window", false, utility_bounds_window},
    {"symmetric-revenue-constructions", false, symmetric_revenue_constructions},
    {"table1-example", false, table1_example},
    {"ce-lp-support-bounds", true, ce_lp_support_bounds},
    {"cce-lp-brackets", true, cce_lp_brackets},
    {"three-player-reduction", true, three_player_reduction},
    {"revenue-vs-gap-monotonicity", true, revenue_vs_gap_monotonicity},
    {"property-suites", false, property_suites},
};

std::string bound_text(double x) {
  if (x <= -kNoBound) return "-inf";
  if (x >= kNoBound) return "inf";
  return format_double(x);
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(bool include_slow) {
  std::vector<CriterionResult> out;
  for (const SuiteItem& item : kSuite) {
    if (item.slow && !include_slow) continue;
    try {
      out.push_back(item.fn());
    } catch (const std::exception& e) {
      CriterionResult failed;
      failed.name = item.name;
      failed.detail = std::string("exception: ") + e.what();
      failed.pass = false;
      out.push_back(std::move(failed));
    }
  }
  return out;
}

std::string format_acceptance_report(
    const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const CriterionResult& c : results) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
        << "\n";
    if (!c.pass) {
      for (const ComparisonRow& r : c.rows) {
        out << "    " << (r.pass ? "ok   " : "FAIL ") << r.label << " = "
            << format_double(r.computed) << " (" << r.source << "), target ["
            << bound_text(r.lo) << ", " << bound_text(r.hi) << "]\n";
      }
    }
  }
  return out.str();
}

}  // namespace aucteq
