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

#include "aucteq/numeric.hpp"

#include <cmath>
#include <string>

#include <doctest.h>

#include "aucteq/errors.hpp"

namespace aucteq {
namespace {

TEST_CASE("format_double round trips exactly") {
  for (double x : {0.1, 1.0 / 3.0, 0.038 - 0.04e-4, 1e-300, 6.02e23, -0.0,
                   0.813559376859257, 2.0}) {
    CHECK(parse_double(format_double(x)) == x);
  }
}

TEST_CASE("parse_double is strict") {
  CHECK(parse_double("0.25") == 0.25);
  CHECK(parse_double("-3") == -3.0);
  CHECK_THROWS_AS(parse_double("0.25x"), InvalidInput);
  CHECK_THROWS_AS(parse_double(""), InvalidInput);
  CHECK_THROWS_AS(parse_double("  1"), InvalidInput);
  CHECK_THROWS_AS(parse_double("nanabc"), InvalidInput);
}

TEST_CASE("bisect handles either sign direction") {
  const double root_up = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(std::abs(root_up - std::sqrt(2.0)) < 1e-11);
  const double root_down = bisect([](double x) { return 1.0 - x; }, 0.0, 3.0);
  CHECK(std::abs(root_down - 1.0) < 1e-11);
  CHECK_THROWS_AS(bisect([](double x) { return x + 10.0; }, 0.0, 1.0),
                  ConstructionError);
}

TEST_CASE("fnv1a64 known vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace aucteq
