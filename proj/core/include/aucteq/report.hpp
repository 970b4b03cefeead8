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

#ifndef AUCTEQ_REPORT_HPP_
#define AUCTEQ_REPORT_HPP_

#include <string>
#include <vector>

namespace aucteq {

// One numeric check: `computed` must land in the closed interval [lo, hi].
// `source` names the route that produced the number (closed form,
// construction, LP, simulation), so a failing report shows which machinery
// disagrees.
struct ComparisonRow {
  std::string label;
  double computed = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::string source;
  bool pass = false;
};

struct CriterionResult {
  std::string name;
  std::string detail;
  bool pass = false;
  std::vector<ComparisonRow> rows;
};

// Runs the full self-check suite: closed-form optima, explicit constructions
// fed through the verifier, LP extremes on bid grids, the three-player
// reduction, and the randomized property suites. With include_slow = false
// the LP-heavy criteria are skipped entirely (they dominate the runtime).
std::vector<CriterionResult> run_acceptance_suite(bool include_slow = true);

// One line per criterion, "[PASS] name: detail"; failing criteria also list
// their rows with the computed value and target interval.
std::string format_acceptance_report(const std::vector<CriterionResult>& results);

}  // namespace aucteq

#endif  // AUCTEQ_REPORT_HPP_
