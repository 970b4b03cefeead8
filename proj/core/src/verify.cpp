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

#include "aucteq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "aucteq/errors.hpp"
#include "aucteq/numeric.hpp"

namespace aucteq {

namespace {

// Win mass of a deviation bid against a fixed opponent-maximum distribution,
// queryable under both tie policies. Sorted by the opponents' maximum bid
// with prefix sums, so each query is one binary search.
class DeviationCurve {
 public:
  // entries: (max of the other players' bids, probability)
  explicit DeviationCurve(std::vector<std::pair<double, double>> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    prefix_.resize(entries_.size() + 1, 0.0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + entries_[i].second;
    }
  }

  // Mass with opponent maximum <= d (deviator wins ties).
  double win_mass_wins(double d) const {
    auto it = std::upper_bound(
        entries_.begin(), entries_.end(), d,
        [](double x, const auto& e) { return x < e.first; });
    return prefix_[static_cast<std::size_t>(it - entries_.begin())];
  }

  // Mass with opponent maximum < d (deviator loses ties).
  double win_mass_loses(double d) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), d,
        [](const auto& e, double x) { return e.first < x; });
    return prefix_[static_cast<std::size_t>(it - entries_.begin())];
  }

 private:
  std::vector<std::pair<double, double>> entries_;
  std::vector<double> prefix_;
};

double max_of_others(const Atom& atom, int player) {
  double m = 0.0;
  bool first = true;
  for (std::size_t j = 0; j < atom.bids.size(); ++j) {
    if (static_cast<int>(j) == player) continue;
    if (first || atom.bids[j] > m) m = atom.bids[j];
    first = false;
  }
  return m;
}

DeviationCurve curve_for_player(const FiniteEquilibrium& eq, int player) {
  std::vector<std::pair<double, double>> entries;
  entries.reserve(eq.atoms().size());
  for (const Atom& a : eq.atoms()) {
    entries.emplace_back(max_of_others(a, player), a.p);
  }
  return DeviationCurve(std::move(entries));
}

// Best candidate deviation against a curve; ascending scan keeps the lowest
// maximizing bid. Utilities of losing bids are 0, so the best is >= 0.
DeviationStats best_over_candidates(const DeviationCurve& curve,
                                    const std::vector<double>& candidates,
                                    double value, bool deviator_wins) {
  DeviationStats best;
  best.best_bid = candidates.empty() ? 0.0 : candidates.front();
  best.best_utility = -1.0;
  for (double d : candidates) {
    const double mass =
        deviator_wins ? curve.win_mass_wins(d) : curve.win_mass_loses(d);
    const double utility = (value - d) * mass;
    if (utility > best.best_utility) {
      best.best_bid = d;
      best.best_utility = utility;
    }
  }
  if (best.best_utility < 0.0) best.best_utility = 0.0;
  return best;
}

void check_sizes(const AuctionInstance& instance, const FiniteEquilibrium& eq,
                 double tolerance) {
  if (eq.num_players() != instance.num_players()) {
    throw InvalidInput("distribution and instance disagree on player count");
  }
  if (!(tolerance >= 0.0)) throw InvalidInput("tolerance must be >= 0");
}

}  // namespace

std::string to_string(TiePolicy policy) {
  return policy == TiePolicy::kDeviatorWins ? "deviator-wins"
                                            : "deviator-loses";
}

std::vector<double> candidate_deviations(const FiniteEquilibrium& eq) {
  std::vector<double> out = {0.0};
  for (const Atom& a : eq.atoms()) {
    out.insert(out.end(), a.bids.begin(), a.bids.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<double, double> best_constant_deviation(const AuctionInstance& instance,
                                                  const FiniteEquilibrium& eq,
                                                  int player, TiePolicy policy) {
  check_sizes(instance, eq, 0.0);
  if (player < 0 || player >= instance.num_players()) {
    throw InvalidInput("player index out of range");
  }
  const DeviationCurve curve = curve_for_player(eq, player);
  const DeviationStats best =
      best_over_candidates(curve, candidate_deviations(eq),
                           instance.value(player),
                           policy == TiePolicy::kDeviatorWins);
  return {best.best_bid, best.best_utility};
}

VerificationReport verify_cce(const AuctionInstance& instance,
                              const FiniteEquilibrium& eq, double tolerance,
                              TiePolicy policy) {
  check_sizes(instance, eq, tolerance);
  const int n = instance.num_players();
  const std::vector<double> candidates = candidate_deviations(eq);
  const OutcomeSummary summary = summarize(instance, eq);

  VerificationReport report;
  report.policy = policy;
  report.tolerance = tolerance;
  report.players.resize(n);
  for (int i = 0; i < n; ++i) {
    PlayerVerification& pv = report.players[i];
    pv.equilibrium_utility = summary.utility[i];
    const DeviationCurve curve = curve_for_player(eq, i);
    pv.deviator_wins =
        best_over_candidates(curve, candidates, instance.value(i), true);
    pv.deviator_loses =
        best_over_candidates(curve, candidates, instance.value(i), false);
    for (DeviationStats* stats : {&pv.deviator_wins, &pv.deviator_loses}) {
      stats->regret =
          std::max(0.0, stats->best_utility - pv.equilibrium_utility);
    }
    report.max_regret = std::max(report.max_regret, pv.under(policy).regret);
  }
  report.pass = report.max_regret <= tolerance;
  return report;
}

VerificationReport verify_ce(const AuctionInstance& instance,
                             const FiniteEquilibrium& eq, double tolerance,
                             TiePolicy policy) {
  check_sizes(instance, eq, tolerance);
  const int n = instance.num_players();
  const std::vector<double> candidates = candidate_deviations(eq);
  const OutcomeSummary summary = summarize(instance, eq);

  VerificationReport report;
  report.policy = policy;
  report.tolerance = tolerance;
  report.players.resize(n);

  ConditionalWorstCase worst;
  bool have_worst = false;

  for (int i = 0; i < n; ++i) {
    PlayerVerification& pv = report.players[i];
    pv.equilibrium_utility = summary.utility[i];
    pv.deviator_wins.best_utility = 0.0;
    pv.deviator_loses.best_utility = 0.0;

    // Group atoms by the player's recommended bid (exact comparison).
    std::map<double, std::vector<const Atom*>> groups;
    for (const Atom& a : eq.atoms()) groups[a.bids[i]].push_back(&a);

    ConditionalWorstCase player_worst[2];
    bool have_player_worst[2] = {false, false};

    for (const auto& [recommendation, atoms] : groups) {
      double mass = 0.0;
      double on_path = 0.0;  // conditional utility times mass
      std::vector<std::pair<double, double>> entries;
      entries.reserve(atoms.size());
      for (const Atom* a : atoms) {
        mass += a->p;
        on_path += a->p * a->share_of(i) * (instance.value(i) - a->max_bid());
        entries.emplace_back(max_of_others(*a, i), a->p);
      }
      if (mass < 1e-15) continue;  // avoid conditioning on nothing
      on_path /= mass;
      const DeviationCurve curve(std::move(entries));
      for (int w = 0; w < 2; ++w) {
        DeviationStats best = best_over_candidates(curve, candidates,
                                                   instance.value(i), w == 0);
        best.best_utility /= mass;
        const double gain = best.best_utility - on_path;
        if (!have_player_worst[w] || gain > player_worst[w].gain) {
          player_worst[w] = {i, recommendation, best.best_bid, gain, on_path};
          have_player_worst[w] = true;
        }
      }
    }

    for (int w = 0; w < 2; ++w) {
      DeviationStats& stats = w == 0 ? pv.deviator_wins : pv.deviator_loses;
      if (!have_player_worst[w]) continue;
      stats.best_bid = player_worst[w].deviation;
      stats.best_utility = player_worst[w].on_path_utility + player_worst[w].gain;
      stats.regret = std::max(0.0, player_worst[w].gain);
    }
    const int selected = policy == TiePolicy::kDeviatorWins ? 0 : 1;
    if (have_player_worst[selected]) {
      report.max_regret = std::max(
          report.max_regret, std::max(0.0, player_worst[selected].gain));
      if (!have_worst || player_worst[selected].gain > worst.gain) {
        worst = player_worst[selected];
        have_worst = true;
      }
    }
  }

  if (have_worst) report.worst_conditional = worst;
  report.pass = report.max_regret <= tolerance;
  return report;
}

VerificationReport verify_cce(const AuctionEquilibrium& eq, double tolerance,
                              TiePolicy policy) {
  return verify_cce(eq.instance, eq.distribution, tolerance, policy);
}

VerificationReport verify_ce(const AuctionEquilibrium& eq, double tolerance,
                             TiePolicy policy) {
  return verify_ce(eq.instance, eq.distribution, tolerance, policy);
}

CharacterizationReport check_ce_characterization(const AuctionInstance& instance,
                                                 const FiniteEquilibrium& eq,
                                                 double tolerance) {
  if (!verify_ce(instance, eq, tolerance, TiePolicy::kDeviatorLoses).pass) {
    throw PreconditionError(
        "outcome characterization applies to conditional equilibria only");
  }
  const double v1 = instance.value(0);
  const double v2 = instance.value(1);

  CharacterizationReport report;
  const auto& atoms = eq.atoms();
  for (std::size_t idx = 0; idx < atoms.size(); ++idx) {
    const Atom& a = atoms[idx];
    const double price = a.max_bid();
    if (price < v2 - tolerance || price > v1 + tolerance) {
      report.violations.push_back("atom " + std::to_string(idx) + ": price " +
                                  format_double(price) +
                                  " outside [v2, v1] within tolerance");
    }
    if (v1 > v2) {
      if (a.share_of(0) < 1.0 - 1e-12) {
        report.violations.push_back(
            "atom " + std::to_string(idx) +
            ": a lower-value player wins with share " +
            format_double(1.0 - a.share_of(0)));
      }
    } else {
      for (const auto& [player, share] : a.winner_shares) {
        if (instance.value(player) != v1) {
          report.violations.push_back(
              "atom " + std::to_string(idx) + ": player " +
              std::to_string(player + 1) + " with value " +
              format_double(instance.value(player)) + " < top value wins");
        }
      }
    }
  }
  if (v1 == v2) {
    const OutcomeSummary summary = summarize(instance, eq);
    for (int i = 0; i < instance.num_players(); ++i) {
      if (std::abs(summary.utility[i]) > tolerance + 1e-12) {
        report.violations.push_back("player " + std::to_string(i + 1) +
                                    " has utility " +
                                    format_double(summary.utility[i]) +
                                    ", expected 0 within tolerance");
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace aucteq
