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

#include <benchmark/benchmark.h>

#include "aucteq/auction.hpp"
#include "aucteq/bounds.hpp"
#include "aucteq/construct.hpp"
#include "aucteq/learning.hpp"
#include "aucteq/lp.hpp"
#include "aucteq/piecewise_cdf.hpp"
#include "aucteq/verify.hpp"

namespace {

using namespace aucteq;

void BM_ExtremalCceRevenue(benchmark::State& state) {
  const AuctionInstance inst({1.0, 0.5});
  const BidGrid grid = BidGrid::uniform(inst, static_cast<int>(state.range(0)),
                                        /*no_overbid=*/true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal_equilibrium(
        inst, grid, EquilibriumClass::kCce, LpObjective::kRevenue,
        LpDirection::kMinimize));
  }
}
BENCHMARK(BM_ExtremalCceRevenue)->Arg(10)->Arg(20)->Arg(40);

void BM_ExtremalCeWelfare(benchmark::State& state) {
  const AuctionInstance inst({1.0, 0.5});
  const BidGrid grid = BidGrid::uniform(inst, static_cast<int>(state.range(0)),
                                        /*no_overbid=*/true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal_equilibrium(
        inst, grid, EquilibriumClass::kCe, LpObjective::kWelfare,
        LpDirection::kMinimize));
  }
}
BENCHMARK(BM_ExtremalCeWelfare)->Arg(6)->Arg(12);

void BM_VerifyCceSixAtoms(benchmark::State& state) {
  const AuctionEquilibrium eq = construct_table1(1e-4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_cce(eq, 1e-9));
  }
}
BENCHMARK(BM_VerifyCceSixAtoms);

void BM_VerifyCeDiscretized(benchmark::State& state) {
  const double alpha = minimize_welfare().arg("alpha");
  const AuctionEquilibrium eq = discretize(
      construct_worst_welfare(alpha), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_ce(eq, 1.0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifyCeDiscretized)->Arg(50)->Arg(100)->Arg(200);

void BM_RegretMatching(benchmark::State& state) {
  const AuctionInstance inst({1.0, 0.75});
  const BidGrid grid = BidGrid::uniform(inst, 20, /*no_overbid=*/true);
  LearnerConfig config;
  config.rounds = state.range(0);
  config.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_no_regret(inst, grid, config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RegretMatching)->Arg(10000)->Arg(100000);

void BM_CdfEval(benchmark::State& state) {
  const double alpha = 0.274321621580725;
  const PiecewiseCdf cdf =
      min_envelope(alpha, beta_of_alpha(alpha), 1.0 - alpha);
  double x = 0.0;
  const double step = cdf.top() / 4097;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf.eval(x));
    x += step;
    if (x > cdf.top()) x = 0.0;
  }
}
BENCHMARK(BM_CdfEval);

void BM_CdfExpectedValue(benchmark::State& state) {
  const double alpha = 0.274321621580725;
  const PiecewiseCdf cdf =
      min_envelope(alpha, beta_of_alpha(alpha), 1.0 - alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf.expected_value());
  }
}
BENCHMARK(BM_CdfExpectedValue);

}  // namespace

BENCHMARK_MAIN();
