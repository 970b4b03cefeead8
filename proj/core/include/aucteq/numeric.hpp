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

#ifndef AUCTEQ_NUMERIC_HPP_
#define AUCTEQ_NUMERIC_HPP_

#include <functional>
#include <string>
#include <string_view>

namespace aucteq {

// Shortest decimal string that parses back to exactly `x` (std::to_chars).
// Rejects non-finite values.
std::string format_double(double x);

// Strict inverse of format_double: the whole string must be a decimal (or
// scientific) literal. Throws InvalidInput otherwise.
double parse_double(std::string_view s);

// Root of f on [lo, hi] by bisection. Requires a sign change (or an exact
// zero at an endpoint); iterates until the bracket width is <= xtol.
// Throws ConstructionError when f(lo) and f(hi) have the same sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol = 1e-12);

// 64-bit FNV-1a over raw bytes; used for input digests in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace aucteq

#endif  // AUCTEQ_NUMERIC_HPP_
