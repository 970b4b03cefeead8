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

#include "aucteq/json_io.hpp"

#include <string>

#include <doctest.h>
#include "json.hpp"

#include "aucteq/bounds.hpp"
#include "aucteq/construct.hpp"
#include "aucteq/errors.hpp"
#include "aucteq/learning.hpp"
#include "aucteq/verify.hpp"

namespace aucteq {
namespace {

TEST_CASE("equilibrium serialization round-trips to the identical string") {
  const AuctionEquilibrium eq = construct_table1(1e-4);
  const std::string once = to_json(eq);
  const AuctionEquilibrium back = equilibrium_from_json(once);
  CHECK(back.instance.values() == eq.instance.values());
  CHECK(back.distribution.atoms().size() == 6);
  CHECK(to_json(back) == once);  // numbers re-read bit-exactly
}

TEST_CASE("numbers as decimal strings are accepted") {
  const char* text = R"({
    "values": ["2", 1.0],
    "atoms": [
      {"p": "0.5", "bids": ["1.0", "0.2"], "winner_shares": {"1": "1.0"}},
      {"p": 0.5, "bids": [0.25, 0.75], "winner_shares": {"2": 1.0}}
    ]
  })";
  const AuctionEquilibrium eq = equilibrium_from_json(text);
  CHECK(eq.instance.value(0) == 2.0);
  CHECK(eq.distribution.atoms()[0].p == 0.5);
  CHECK(eq.distribution.atoms()[0].share_of(0) == 1.0);
  CHECK(eq.distribution.atoms()[1].share_of(1) == 1.0);
}

TEST_CASE("parse errors carry context and throw InvalidInput") {
  try {
    equilibrium_from_json("{ not json");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("invalid JSON") != std::string::npos);
  }
  try {
    equilibrium_from_json(R"({"values": [1.0, 0.5]})");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("atoms") != std::string::npos);
  }
  const char* bad_id = R"({
    "values": [1.0, 0.5],
    "atoms": [{"p": 1.0, "bids": [0.5, 0.2], "winner_shares": {"7": 1.0}}]
  })";
  CHECK_THROWS_AS(equilibrium_from_json(bad_id), InvalidInput);
  const char* named_id = R"({
    "values": [1.0, 0.5],
    "atoms": [{"p": 1.0, "bids": [0.5, 0.2], "winner_shares": {"x": 1.0}}]
  })";
  CHECK_THROWS_AS(equilibrium_from_json(named_id), InvalidInput);
  const char* frac_priority = R"({
    "values": [1.0, 0.5], "tie_priority": [1.5, 2],
    "atoms": [{"p": 1.0, "bids": [0.5, 0.2], "winner_shares": {"1": 1.0}}]
  })";
  CHECK_THROWS_AS(equilibrium_from_json(frac_priority), InvalidInput);
}

TEST_CASE("price distribution round-trip evaluates identically") {
  const double alpha = 0.274321621580725;
  const PiecewiseCdf cdf =
      min_envelope(alpha, beta_of_alpha(alpha), 1.0 - alpha);
  const std::string text = to_json(cdf);
  const PiecewiseCdf back = cdf_from_json(text);
  CHECK(to_json(back) == text);
  for (int i = 0; i <= 10; ++i) {
    const double x = cdf.top() * i / 10;
    CHECK(back.eval(x) == cdf.eval(x));
  }
}

TEST_CASE("verification report JSON uses 1-based player ids") {
  // Player index 1 is the one with the profitable conditional deviation:
  // told 0.1 it faces 0.2 and can jump to 0.3.
  const AuctionInstance inst({1.0, 1.0});
  const FiniteEquilibrium eq({
      {0.6, {0.3, 0.3}, {{0, 1.0}}},
      {0.4, {0.2, 0.1}, {{0, 1.0}}},
  });
  const VerificationReport rep =
      verify_ce(inst, eq, 0.1, TiePolicy::kDeviatorLoses);
  REQUIRE(rep.worst_conditional.has_value());
  REQUIRE(rep.worst_conditional->player == 1);

  const nlohmann::json j = nlohmann::json::parse(to_json(rep, "ce"));
  CHECK(j.at("mode") == "ce");
  CHECK(j.at("policy") == "deviator-loses");
  CHECK(j.at("pass") == false);
  CHECK(j.at("worst_conditional").at("player") == 2);
  CHECK(j.at("worst_conditional").at("deviation").get<double>() == 0.3);
  CHECK(j.at("players").size() == 2);
}

TEST_CASE("bound and summary payloads expose named arguments") {
  const nlohmann::json j = nlohmann::json::parse(to_json(minimize_welfare()));
  CHECK(j.at("value").get<double>() ==
        doctest::Approx(0.813559376859257).epsilon(1e-9));
  CHECK(j.at("args").at("alpha").get<double>() ==
        doctest::Approx(0.274321621580725).epsilon(1e-6));

  const AuctionEquilibrium eq = construct_table1(1e-4);
  const nlohmann::json s = nlohmann::json::parse(
      to_json(eq.instance, summarize(eq.instance, eq.distribution)));
  CHECK(s.at("welfare").get<double>() == doctest::Approx(1.96));
  CHECK(s.at("utility").size() == 2);
}

TEST_CASE("continuous construction payload carries cdf and shares") {
  const ContinuousEquilibrium eq = construct_worst_welfare(0.274321621580725);
  const nlohmann::json j = nlohmann::json::parse(to_json(eq));
  CHECK(j.contains("price_cdf"));
  CHECK(j.at("price_cdf").at("segments").size() == 2);
  CHECK_FALSE(j.at("share_pieces").empty());
  CHECK(j.at("atom_shares").size() == 1);
}

TEST_CASE("simulation payload and trajectory CSV") {
  const AuctionInstance inst({1.0, 0.75});
  const BidGrid grid = BidGrid::uniform(inst, 5, true);
  LearnerConfig config;
  config.rounds = 2000;
  config.seed = 17;
  config.trajectory_samples = 10;
  const SimResult result = run_no_regret(inst, grid, config);

  const nlohmann::json j = nlohmann::json::parse(to_json(inst, result));
  CHECK(j.at("eps").get<double>() >= 0.0);
  CHECK_FALSE(j.at("empirical").at("atoms").empty());
  CHECK(j.at("trajectory").size() == result.trajectory.size());

  const std::string csv = trajectory_csv(result.trajectory);
  CHECK(csv.rfind("round,avg_welfare,avg_revenue\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n' ? 1 : 0;
  CHECK(lines == result.trajectory.size() + 1);
}

TEST_CASE("cdf sample CSV has a header and n+1 rows") {
  const PiecewiseCdf cdf = min_envelope(0.25, 0.1875, 0.75);
  const std::string csv = cdf_samples_csv(cdf, 4);
  CHECK(csv.rfind("x,F\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n' ? 1 : 0;
  CHECK(lines == 6);
  CHECK(csv.find(",1\n") != std::string::npos);  // F(top) == 1
  CHECK_THROWS_AS(cdf_samples_csv(cdf, 0), InvalidInput);
}

}  // namespace
}  // namespace aucteq
