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

#include "aucteq/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "aucteq/errors.hpp"
#include "aucteq/numeric.hpp"

namespace aucteq {

namespace {

using nlohmann::json;

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw InvalidInput(std::string("missing JSON field '") + key + "'");
  }
  return *it;
}

// Numbers may arrive as JSON numbers or as decimal strings; both map to the
// nearest double, so emitted files reload bit-exactly.
double number(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_double(j.get<std::string>());
  throw InvalidInput(std::string(what) + ": expected a number");
}

std::vector<double> number_list(const json& j, const char* what) {
  if (!j.is_array()) {
    throw InvalidInput(std::string(what) + ": expected an array");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& item : j) out.push_back(number(item, what));
  return out;
}

json instance_fields(const AuctionInstance& instance) {
  json j;
  j["values"] = instance.values();
  json prio = json::array();
  for (int p : instance.tie_priority()) prio.push_back(p + 1);
  j["tie_priority"] = std::move(prio);
  return j;
}

json equilibrium_json(const AuctionEquilibrium& eq) {
  json j = instance_fields(eq.instance);
  json atoms = json::array();
  for (const Atom& a : eq.distribution.atoms()) {
    json ja;
    ja["p"] = a.p;
    ja["bids"] = a.bids;
    json shares;
    for (const auto& [player, share] : a.winner_shares) {
      shares[std::to_string(player + 1)] = share;
    }
    ja["winner_shares"] = std::move(shares);
    atoms.push_back(std::move(ja));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

json cdf_json(const PiecewiseCdf& cdf) {
  json j;
  json atoms = json::array();
  for (const CdfAtom& a : cdf.atoms()) {
    atoms.push_back({{"x", a.x}, {"mass", a.mass}});
  }
  json segments = json::array();
  for (const ReciprocalSegment& s : cdf.segments()) {
    segments.push_back({{"a", s.a}, {"b", s.b}, {"lo", s.lo}, {"hi", s.hi}});
  }
  j["atoms"] = std::move(atoms);
  j["segments"] = std::move(segments);
  j["top"] = cdf.top();
  return j;
}

json stats_json(const DeviationStats& stats) {
  return {{"best_bid", stats.best_bid},
          {"best_utility", stats.best_utility},
          {"regret", stats.regret}};
}

json report_json(const VerificationReport& report, const std::string& mode) {
  json j;
  j["mode"] = mode;
  j["policy"] = to_string(report.policy);
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["max_regret"] = report.max_regret;
  json players = json::array();
  for (const PlayerVerification& pv : report.players) {
    players.push_back({{"equilibrium_utility", pv.equilibrium_utility},
                       {"deviator_wins", stats_json(pv.deviator_wins)},
                       {"deviator_loses", stats_json(pv.deviator_loses)}});
  }
  j["players"] = std::move(players);
  if (report.worst_conditional) {
    const ConditionalWorstCase& w = *report.worst_conditional;
    j["worst_conditional"] = {{"player", w.player + 1},
                              {"recommendation", w.recommendation},
                              {"deviation", w.deviation},
                              {"gain", w.gain},
                              {"on_path_utility", w.on_path_utility}};
  }
  return j;
}

json summary_json(const AuctionInstance& instance,
                  const OutcomeSummary& summary) {
  json j = instance_fields(instance);
  j["win_prob"] = summary.win_prob;
  j["expected_payment"] = summary.expected_payment;
  j["utility"] = summary.utility;
  j["welfare"] = summary.welfare;
  j["revenue"] = summary.revenue;
  return j;
}

}  // namespace

std::string to_json(const AuctionEquilibrium& eq) {
  return equilibrium_json(eq).dump(2);
}

AuctionEquilibrium equilibrium_from_json(std::string_view text) {
  const json j = parse_text(text);
  std::vector<double> values = number_list(field(j, "values"), "values");
  const int n = static_cast<int>(values.size());

  std::vector<int> priority;
  if (j.contains("tie_priority")) {
    for (const json& item : field(j, "tie_priority")) {
      if (!item.is_number_integer()) {
        throw InvalidInput("tie_priority: expected integer player ids");
      }
      priority.push_back(item.get<int>() - 1);
    }
  }
  AuctionInstance instance(std::move(values), std::move(priority));

  std::vector<Atom> atoms;
  for (const json& ja : field(j, "atoms")) {
    Atom a;
    a.p = number(field(ja, "p"), "p");
    a.bids = number_list(field(ja, "bids"), "bids");
    const json& shares = field(ja, "winner_shares");
    if (!shares.is_object()) {
      throw InvalidInput("winner_shares: expected an object keyed by player");
    }
    for (const auto& [key, value] : shares.items()) {
      int player = 0;
      try {
        player = std::stoi(key);
      } catch (...) {
        throw InvalidInput("winner_shares: bad player id '" + key + "'");
      }
      if (player < 1 || player > n) {
        throw InvalidInput("winner_shares: player id " + key +
                           " out of range");
      }
      a.winner_shares.push_back({player - 1, number(value, "winner share")});
    }
    atoms.push_back(std::move(a));
  }
  return {std::move(instance), FiniteEquilibrium(std::move(atoms))};
}

std::string to_json(const PiecewiseCdf& cdf) { return cdf_json(cdf).dump(2); }

PiecewiseCdf cdf_from_json(std::string_view text) {
  const json j = parse_text(text);
  std::vector<CdfAtom> atoms;
  for (const json& ja : field(j, "atoms")) {
    atoms.push_back({number(field(ja, "x"), "x"), number(field(ja, "mass"), "mass")});
  }
  std::vector<ReciprocalSegment> segments;
  for (const json& js : field(j, "segments")) {
    segments.push_back({number(field(js, "a"), "a"), number(field(js, "b"), "b"),
                        number(field(js, "lo"), "lo"),
                        number(field(js, "hi"), "hi")});
  }
  return PiecewiseCdf(std::move(atoms), std::move(segments),
                      number(field(j, "top"), "top"));
}

std::string to_json(const AuctionInstance& instance,
                    const OutcomeSummary& summary) {
  return summary_json(instance, summary).dump(2);
}

std::string to_json(const VerificationReport& report, const std::string& mode) {
  return report_json(report, mode).dump(2);
}

std::string to_json(const BoundResult& bound) {
  json j;
  j["value"] = bound.value;
  j["residual"] = bound.residual;
  json args;
  for (const auto& [name, value] : bound.args) args[name] = value;
  j["args"] = std::move(args);
  return j.dump(2);
}

std::string to_json(const CharacterizationReport& report) {
  json j;
  j["ok"] = report.ok;
  j["violations"] = report.violations;
  return j.dump(2);
}

std::string to_json(const ContinuousEquilibrium& eq) {
  json j = instance_fields(eq.instance());
  j["price_cdf"] = cdf_json(eq.price_cdf());
  json pieces = json::array();
  for (const SharePiece& piece : eq.share_pieces()) {
    pieces.push_back(
        {{"lo", piece.lo}, {"hi", piece.hi}, {"shares", piece.shares}});
  }
  j["share_pieces"] = std::move(pieces);
  json atoms = json::array();
  for (const AtomShares& a : eq.atom_shares()) {
    atoms.push_back({{"x", a.x}, {"shares", a.shares}});
  }
  j["atom_shares"] = std::move(atoms);
  return j.dump(2);
}

std::string to_json(const AuctionInstance& instance, const SimResult& result) {
  json j;
  j["average_regret"] = result.average_regret;
  j["eps"] = result.eps();
  j["empirical"] = equilibrium_json({instance, result.empirical});
  json traj = json::array();
  for (const TrajectoryPoint& p : result.trajectory) {
    traj.push_back({{"round", p.round},
                    {"avg_welfare", p.avg_welfare},
                    {"avg_revenue", p.avg_revenue}});
  }
  j["trajectory"] = std::move(traj);
  return j.dump(2);
}

std::string to_json(const ExtremalResult& result) {
  json j;
  j["value"] = result.value;
  j["iterations"] = result.solution.iterations;
  j["certificate"] = {
      {"max_primal_residual", result.solution.certificate.max_primal_residual},
      {"min_reduced_cost", result.solution.certificate.min_reduced_cost}};
  j["equilibrium"] = equilibrium_json(result.equilibrium);
  j["verification"] = report_json(
      result.report, result.report.worst_conditional ? "ce" : "cce");
  return j.dump(2);
}

std::string cdf_samples_csv(const PiecewiseCdf& cdf, int n) {
  if (n < 1) throw InvalidInput("need at least one sample interval");
  std::string out = "x,F\n";
  for (int i = 0; i <= n; ++i) {
    const double x = cdf.top() * i / n;
    out += format_double(x);
    out += ',';
    out += format_double(cdf.eval(x));
    out += '\n';
  }
  return out;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& trajectory) {
  std::string out = "round,avg_welfare,avg_revenue\n";
  for (const TrajectoryPoint& p : trajectory) {
    out += std::to_string(p.round);
    out += ',';
    out += format_double(p.avg_welfare);
    out += ',';
    out += format_double(p.avg_revenue);
    out += '\n';
  }
  return out;
}

}  // namespace aucteq
