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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aucteq/auction.hpp"
#include "aucteq/bounds.hpp"
#include "aucteq/construct.hpp"
#include "aucteq/errors.hpp"
#include "aucteq/json_io.hpp"
#include "aucteq/learning.hpp"
#include "aucteq/lp.hpp"
#include "aucteq/numeric.hpp"
#include "aucteq/report.hpp"
#include "aucteq/verify.hpp"

namespace aucteq {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest_hex(const std::string& text) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

// Artifact files land in --output DIR; stdout always carries the main JSON.
struct ArtifactSink {
  std::string dir;

  void write(const std::string& name, const std::string& text) const {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << text;
  }
};

TiePolicy parse_tie(const std::string& name) {
  if (name == "deviator-wins") return TiePolicy::kDeviatorWins;
  if (name == "deviator-loses") return TiePolicy::kDeviatorLoses;
  throw InvalidInput("unknown tie policy: " + name);
}

std::vector<double> parse_value_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
  if (out.empty()) throw InvalidInput("empty value list");
  return out;
}

// "price:mass,price:mass" pairs for the pure-equilibrium mixture.
std::vector<std::pair<double, double>> parse_mixture(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw InvalidInput("mixture entries must look like price:mass");
    }
    out.push_back({parse_double(item.substr(0, colon)),
                   parse_double(item.substr(colon + 1))});
  }
  if (out.empty()) throw InvalidInput("empty mixture");
  return out;
}

json parse_own(const std::string& text) { return json::parse(text); }

json criteria_json(const std::vector<CriterionResult>& results) {
  json list = json::array();
  for (const CriterionResult& c : results) {
    json rows = json::array();
    for (const ComparisonRow& r : c.rows) {
      rows.push_back({{"label", r.label},
                      {"computed", r.computed},
                      {"lo", r.lo},
                      {"hi", r.hi},
                      {"source", r.source},
                      {"pass", r.pass}});
    }
    list.push_back({{"name", c.name},
                    {"detail", c.detail},
                    {"pass", c.pass},
                    {"rows", std::move(rows)}});
  }
  return list;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"correlated and coarse-correlated equilibria of "
               "full-information first-price auctions"};
  app.require_subcommand(1);

  ArtifactSink sink;
  const auto add_output = [&sink](CLI::App* cmd) {
    cmd->add_option("--output", sink.dir,
                    "directory for artifact files (created if missing)");
  };

  std::function<int()> action;

  // verify
  std::string verify_input;
  std::string verify_mode = "cce";
  double verify_tol = 1e-9;
  std::string verify_tie = "deviator-loses";
  CLI::App* verify = app.add_subcommand(
      "verify", "check an equilibrium file against deviation tolerances");
  verify->add_option("--input", verify_input, "equilibrium JSON file")
      ->required();
  verify->add_option("--mode", verify_mode, "cce or ce")
      ->check(CLI::IsMember({"cce", "ce"}));
  verify->add_option("--tol", verify_tol, "regret tolerance");
  verify
      ->add_option("--tie", verify_tie,
                   "tie policy the pass/fail decision keys to")
      ->check(CLI::IsMember({"deviator-loses", "deviator-wins"}));
  add_output(verify);
  verify->callback([&] {
    action = [&]() -> int {
      const std::string text = read_file(verify_input);
      const AuctionEquilibrium eq = equilibrium_from_json(text);
      const TiePolicy tie = parse_tie(verify_tie);
      const VerificationReport report =
          verify_mode == "cce" ? verify_cce(eq, verify_tol, tie)
                               : verify_ce(eq, verify_tol, tie);
      json bundle = parse_own(to_json(report, verify_mode));
      bundle["command"] = "verify";
      bundle["input_digest"] = digest_hex(text);
      const std::string dumped = bundle.dump(2);
      out << dumped << "\n";
      sink.write("verify_report.json", dumped);
      return report.pass ? 0 : 1;
    };
  });

  // construct
  CLI::App* construct = app.add_subcommand(
      "construct", "build the explicit equilibria and print their outcomes");
  construct->require_subcommand(1);

  double table1_eps = 1e-4;
  CLI::App* table1 = construct->add_subcommand(
      "table1", "six-atom two-player example with values 2 and 1");
  table1->add_option("--eps", table1_eps, "bid offset in (0, 1e-3]");
  add_output(table1);
  table1->callback([&] {
    action = [&]() -> int {
      const AuctionEquilibrium eq = construct_table1(table1_eps);
      const std::string eq_text = to_json(eq);
      const std::string summary_text =
          to_json(eq.instance, summarize(eq.instance, eq.distribution));
      json bundle;
      bundle["command"] = "construct table1";
      bundle["equilibrium"] = parse_own(eq_text);
      bundle["summary"] = parse_own(summary_text);
      out << bundle.dump(2) << "\n";
      sink.write("table1.json", eq_text);
      sink.write("summary.json", summary_text);
      return 0;
    };
  });

  double ww_alpha = 0.0;
  bool ww_optimal = false;
  int ww_grid = 0;
  CLI::App* ww = construct->add_subcommand(
      "worst-welfare", "welfare-minimizing coarse equilibrium, values "
                       "(1, 1-alpha)");
  CLI::Option* ww_alpha_opt =
      ww->add_option("--alpha", ww_alpha, "low player's utility parameter");
  ww->add_flag("--optimal", ww_optimal,
               "use the welfare-minimizing alpha (default when --alpha "
               "is absent)")
      ->excludes(ww_alpha_opt);
  ww->add_option("--grid", ww_grid,
                 "also emit the k-cell discretized distribution");
  add_output(ww);
  ww->callback([&] {
    action = [&]() -> int {
      const double alpha = ww_alpha_opt->count() > 0
                               ? ww_alpha
                               : minimize_welfare().arg("alpha");
      const ContinuousEquilibrium ce = construct_worst_welfare(alpha);
      const std::string ce_text = to_json(ce);
      const std::string summary_text =
          to_json(ce.instance(), summarize(ce));
      json bundle;
      bundle["command"] = "construct worst-welfare";
      bundle["continuous"] = parse_own(ce_text);
      bundle["summary"] = parse_own(summary_text);
      sink.write("worst_welfare.json", ce_text);
      sink.write("summary.json", summary_text);
      sink.write("cdf.csv", cdf_samples_csv(ce.price_cdf(), 512));
      if (ww_grid > 0) {
        const AuctionEquilibrium grid = discretize(ce, ww_grid);
        const std::string grid_text = to_json(grid);
        bundle["discretized"] = parse_own(grid_text);
        sink.write("equilibrium.json", grid_text);
      }
      out << bundle.dump(2) << "\n";
      return 0;
    };
  });

  int wr_n = 2;
  double wr_value = 1.0;
  int wr_grid = 0;
  CLI::App* wr = construct->add_subcommand(
      "worst-revenue", "revenue-minimizing symmetric coarse equilibrium "
                       "with n equal values");
  wr->add_option("--n", wr_n, "number of players")->required();
  wr->add_option("--value", wr_value, "common value");
  wr->add_option("--grid", wr_grid,
                 "also emit the k-cell discretized distribution");
  add_output(wr);
  wr->callback([&] {
    action = [&]() -> int {
      const ContinuousEquilibrium ce =
          construct_symmetric_worst_revenue(wr_n, wr_value);
      const std::string ce_text = to_json(ce);
      const std::string summary_text =
          to_json(ce.instance(), summarize(ce));
      json bundle;
      bundle["command"] = "construct worst-revenue";
      bundle["continuous"] = parse_own(ce_text);
      bundle["summary"] = parse_own(summary_text);
      sink.write("worst_revenue.json", ce_text);
      sink.write("summary.json", summary_text);
      sink.write("cdf.csv", cdf_samples_csv(ce.price_cdf(), 512));
      if (wr_grid > 0) {
        const AuctionEquilibrium grid = discretize(ce, wr_grid);
        const std::string grid_text = to_json(grid);
        bundle["discretized"] = parse_own(grid_text);
        sink.write("equilibrium.json", grid_text);
      }
      out << bundle.dump(2) << "\n";
      return 0;
    };
  });

  std::string nm_values;
  std::string nm_mix;
  CLI::App* nm = construct->add_subcommand(
      "nash-mixture", "mixture over pure equilibria at common prices in "
                      "[v2, v1]");
  nm->add_option("--values", nm_values, "v1,v2")->required();
  nm->add_option("--mix", nm_mix, "price:mass,price:mass,...")->required();
  add_output(nm);
  nm->callback([&] {
    action = [&]() -> int {
      const std::vector<double> values = parse_value_list(nm_values);
      if (values.size() != 2) {
        throw InvalidInput("nash-mixture takes exactly two values");
      }
      const AuctionEquilibrium eq = construct_pure_nash_mixture(
          values[0], values[1], parse_mixture(nm_mix));
      const std::string eq_text = to_json(eq);
      const std::string summary_text =
          to_json(eq.instance, summarize(eq.instance, eq.distribution));
      json bundle;
      bundle["command"] = "construct nash-mixture";
      bundle["equilibrium"] = parse_own(eq_text);
      bundle["summary"] = parse_own(summary_text);
      out << bundle.dump(2) << "\n";
      sink.write("nash_mixture.json", eq_text);
      sink.write("summary.json", summary_text);
      return 0;
    };
  });

  // bound
  CLI::App* bound = app.add_subcommand(
      "bound", "evaluate the closed-form welfare and revenue bounds");
  bound->require_subcommand(1);

  const auto bound_action = [&](CLI::App* cmd,
                                std::function<BoundResult()> compute) {
    add_output(cmd);
    cmd->callback([&action, &out, &sink, compute = std::move(compute)] {
      action = [&, compute]() -> int {
        const std::string text = to_json(compute());
        out << text << "\n";
        sink.write("bound.json", text);
        return 0;
      };
    });
  };

  bound_action(
      bound->add_subcommand("welfare-min",
                            "minimum worst-case welfare over the envelope "
                            "family, values (1, 1-alpha)"),
      [] { return minimize_welfare(); });

  bound_action(bound->add_subcommand(
                   "revenue-floor",
                   "least coarse-equilibrium revenue with equal unit values"),
               [] {
                 BoundResult r;
                 r.value = revenue_floor();
                 return r;
               });

  int sym_n = 2;
  double sym_value = 1.0;
  CLI::App* sym = bound->add_subcommand(
      "symmetric", "revenue of the symmetric n-player construction");
  sym->add_option("--n", sym_n, "number of players")->required();
  sym->add_option("--value", sym_value, "common value");
  bound_action(sym, [&sym_n, &sym_value] {
    BoundResult r;
    r.value = symmetric_revenue_bound(sym_n, sym_value);
    r.args = {{"n", static_cast<double>(sym_n)},
              {"value", sym_value},
              {"alpha", symmetric_alpha(sym_n, sym_value)}};
    return r;
  });

  double gap_eps = 0.1;
  CLI::App* gap = bound->add_subcommand(
      "gap", "value gap that forces revenue within eps of the low value");
  gap->add_option("--eps", gap_eps, "revenue slack in (0, 1)")->required();
  bound_action(gap, [&gap_eps] {
    BoundResult r;
    r.value = gap_threshold(gap_eps);
    r.args = {{"eps", gap_eps}};
    return r;
  });

  // lp
  std::string lp_values;
  int lp_grid = 20;
  std::string lp_class = "cce";
  std::string lp_objective = "welfare";
  std::string lp_direction = "min";
  bool lp_no_overbid = false;
  CLI::App* lp = app.add_subcommand(
      "lp", "optimize welfare or revenue over grid equilibria");
  lp->add_option("--values", lp_values, "v1,v2[,v3]")->required();
  lp->add_option("--grid", lp_grid, "uniform grid cells k");
  lp->add_option("--class", lp_class, "cce or ce")
      ->check(CLI::IsMember({"cce", "ce"}));
  lp->add_option("--objective", lp_objective, "welfare or revenue")
      ->check(CLI::IsMember({"welfare", "revenue"}));
  lp->add_option("--direction", lp_direction, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  lp->add_flag("--no-overbid", lp_no_overbid,
               "restrict each player's bids to at most their value");
  add_output(lp);
  lp->callback([&] {
    action = [&]() -> int {
      const AuctionInstance inst(parse_value_list(lp_values));
      const BidGrid grid = BidGrid::uniform(inst, lp_grid, lp_no_overbid);
      const ExtremalResult result = extremal_equilibrium(
          inst, grid,
          lp_class == "cce" ? EquilibriumClass::kCce : EquilibriumClass::kCe,
          lp_objective == "welfare" ? LpObjective::kWelfare
                                    : LpObjective::kRevenue,
          lp_direction == "min" ? LpDirection::kMinimize
                                : LpDirection::kMaximize);
      const std::string text = to_json(result);
      out << text << "\n";
      sink.write("lp_result.json", text);
      sink.write("equilibrium.json", to_json(result.equilibrium));
      return 0;
    };
  });

  // simulate
  std::string sim_values;
  int sim_grid = 20;
  std::string sim_algo = "regret-matching";
  long long sim_rounds = 100000;
  std::uint64_t sim_seed = 1;
  double sim_rate = 0.0;
  bool sim_no_overbid = false;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run no-regret bidding dynamics on a grid");
  simulate->add_option("--values", sim_values, "v1,v2[,v3]")->required();
  simulate->add_option("--grid", sim_grid, "uniform grid cells k");
  simulate->add_option("--algo", sim_algo, "regret-matching or mw")
      ->check(CLI::IsMember({"regret-matching", "mw"}));
  simulate->add_option("--rounds", sim_rounds, "number of rounds");
  CLI::Option* seed_opt =
      simulate->add_option("--seed", sim_seed, "rng seed (AUCTEQ_SEED "
                           "overrides the default when the flag is absent)");
  simulate->add_option("--rate", sim_rate,
                       "multiplicative-weights step size (0 picks "
                       "sqrt(ln(k)/T))");
  simulate->add_flag("--no-overbid", sim_no_overbid,
                     "restrict each player's bids to at most their value");
  add_output(simulate);
  simulate->callback([&] {
    action = [&]() -> int {
      const AuctionInstance inst(parse_value_list(sim_values));
      const BidGrid grid = BidGrid::uniform(inst, sim_grid, sim_no_overbid);
      LearnerConfig config;
      config.algorithm = sim_algo == "mw"
                             ? LearnerAlgorithm::kMultiplicativeWeights
                             : LearnerAlgorithm::kRegretMatching;
      config.rounds = sim_rounds;
      config.learning_rate = sim_rate;
      config.seed = sim_seed;
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("AUCTEQ_SEED")) {
          config.seed = static_cast<std::uint64_t>(
              std::strtoull(env, nullptr, 10));
        }
      }
      const SimResult sim = run_no_regret(inst, grid, config);
      const std::string text = to_json(inst, sim);
      out << text << "\n";
      sink.write("simulation.json", text);
      sink.write("trajectory.csv", trajectory_csv(sim.trajectory));
      sink.write("empirical.json",
                 to_json(AuctionEquilibrium(inst, sim.empirical)));
      return 0;
    };
  });

  // reduce
  std::string reduce_input;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "collapse a 3+ player equilibrium onto the top two players");
  reduce->add_option("--input", reduce_input, "equilibrium JSON file")
      ->required();
  add_output(reduce);
  reduce->callback([&] {
    action = [&]() -> int {
      const std::string text = read_file(reduce_input);
      const AuctionEquilibrium eq = equilibrium_from_json(text);
      const AuctionEquilibrium reduced =
          reduce_to_two(eq.instance, eq.distribution);
      const std::string eq_text = to_json(reduced);
      const std::string summary_text = to_json(
          reduced.instance, summarize(reduced.instance, reduced.distribution));
      json bundle;
      bundle["command"] = "reduce";
      bundle["input_digest"] = digest_hex(text);
      bundle["equilibrium"] = parse_own(eq_text);
      bundle["summary"] = parse_own(summary_text);
      out << bundle.dump(2) << "\n";
      sink.write("reduced.json", eq_text);
      sink.write("summary.json", summary_text);
      return 0;
    };
  });

  // report
  bool report_fast = false;
  CLI::App* report = app.add_subcommand(
      "report", "run the full self-check suite and print a pass/fail table");
  report->add_flag("--fast", report_fast, "skip the LP-heavy criteria");
  add_output(report);
  report->callback([&] {
    action = [&]() -> int {
      const std::vector<CriterionResult> results =
          run_acceptance_suite(!report_fast);
      out << format_acceptance_report(results);
      json bundle;
      bundle["command"] = "report";
      bundle["criteria"] = criteria_json(results);
      bool all = true;
      for (const CriterionResult& c : results) all = all && c.pass;
      bundle["pass"] = all;
      sink.write("report.json", bundle.dump(2));
      return all ? 0 : 1;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("aucteq");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }

  try {
    return action();
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace aucteq
