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

#include "aucteq/numeric.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

#include "aucteq/errors.hpp"

namespace aucteq {

std::string format_double(double x) {
  if (!std::isfinite(x)) {
    throw InvalidInput("format_double: value is not finite");
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  if (res.ec != std::errc()) {
    throw InvalidInput("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double out = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || res.ptr != last || s.empty()) {
    throw InvalidInput("parse_double: not a decimal literal: '" +
                       std::string(s) + "'");
  }
  if (!std::isfinite(out)) {
    throw InvalidInput("parse_double: value is not finite: '" +
                       std::string(s) + "'");
  }
  return out;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol) {
  if (!(lo < hi)) {
    throw ConstructionError("bisect: empty bracket");
  }
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw ConstructionError("bisect: no sign change on bracket [" +
                            format_double(lo) + ", " + format_double(hi) + "]");
  }
  for (int it = 0; it < 200 && hi - lo > xtol; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace aucteq
