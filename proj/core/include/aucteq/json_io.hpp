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
// JSON (de)serialization. Player ids are 1-based in JSON. Every numeric
// field round-trips bit-exactly: emission uses the shortest representation
// that parses back to the same double, and parsers accept numbers given as
// decimal strings too.

#ifndef AUCTEQ_JSON_IO_HPP_
#define AUCTEQ_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "aucteq/auction.hpp"
#include "aucteq/bounds.hpp"
#include "aucteq/construct.hpp"
#include "aucteq/learning.hpp"
#include "aucteq/lp.hpp"
#include "aucteq/piecewise_cdf.hpp"
#include "aucteq/verify.hpp"

namespace aucteq {

// { "values": [...], "tie_priority": [...], "atoms":
//   [ { "p": .., "bids": [...], "winner_shares": {"1": ..} } ] }
std::string to_json(const AuctionEquilibrium& eq);
AuctionEquilibrium equilibrium_from_json(std::string_view text);

// { "atoms": [{"x": .., "mass": ..}], "segments":
//   [{"a": .., "b": .., "lo": .., "hi": ..}], "top": .. }
std::string to_json(const PiecewiseCdf& cdf);
PiecewiseCdf cdf_from_json(std::string_view text);

std::string to_json(const AuctionInstance& instance,
                    const OutcomeSummary& summary);

// `mode` is "cce" or "ce".
std::string to_json(const VerificationReport& report, const std::string& mode);

std::string to_json(const BoundResult& bound);

std::string to_json(const CharacterizationReport& report);

std::string to_json(const ContinuousEquilibrium& eq);

std::string to_json(const AuctionInstance& instance, const SimResult& result);

// Equilibrium, optimum, and certificate of one extremal LP solve.
std::string to_json(const ExtremalResult& result);

// n+1 evenly spaced (x, F(x)) samples on [0, top], CSV with a header row.
std::string cdf_samples_csv(const PiecewiseCdf& cdf, int n);

// round, avg_welfare, avg_revenue rows.
std::string trajectory_csv(const std::vector<TrajectoryPoint>& trajectory);

}  // namespace aucteq

#endif  // AUCTEQ_JSON_IO_HPP_
