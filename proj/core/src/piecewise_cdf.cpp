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

#include "aucteq/piecewise_cdf.hpp"

#include <algorithm>
#include <cmath>

#include "aucteq/errors.hpp"
#include "aucteq/numeric.hpp"

namespace aucteq {
namespace {

constexpr double kTopTol = 1e-12;   // |F(top) - 1|
constexpr double kJoinTol = 1e-9;   // segment start vs running value

}  // namespace

PiecewiseCdf::PiecewiseCdf(std::vector<CdfAtom> atoms,
                           std::vector<ReciprocalSegment> segments, double top)
    : atoms_(std::move(atoms)), segments_(std::move(segments)), top_(top) {
  if (!std::isfinite(top_) || top_ < 0.0) {
    throw InvalidInput("PiecewiseCdf: top must be finite and >= 0");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const CdfAtom& l, const CdfAtom& r) { return l.x < r.x; });
  std::sort(segments_.begin(), segments_.end(),
            [](const ReciprocalSegment& l, const ReciprocalSegment& r) {
              return l.lo < r.lo;
            });
  for (size_t i = 0; i < atoms_.size(); ++i) {
    const CdfAtom& at = atoms_[i];
    if (!std::isfinite(at.x) || at.x < 0.0 || at.x > top_ || !(at.mass > 0.0)) {
      throw InvalidInput("PiecewiseCdf: atom outside [0, top] or empty mass");
    }
    if (i > 0 && atoms_[i - 1].x == at.x) {
      throw InvalidInput("PiecewiseCdf: duplicate atom position");
    }
  }
  for (size_t i = 0; i < segments_.size(); ++i) {
    const ReciprocalSegment& s = segments_[i];
    if (!std::isfinite(s.a) || !std::isfinite(s.b) || !(s.a > 0.0) ||
        !(s.lo >= 0.0) || !(s.lo <= s.hi) || !(s.hi < s.b) || s.hi > top_) {
      throw InvalidInput("PiecewiseCdf: bad reciprocal segment");
    }
    if (s.value_at(s.hi) > 1.0 + kTopTol) {
      throw InvalidInput("PiecewiseCdf: segment exceeds 1");
    }
    if (i > 0 && segments_[i - 1].hi > s.lo) {
      throw InvalidInput("PiecewiseCdf: overlapping segments");
    }
    for (const CdfAtom& at : atoms_) {
      if (at.x > s.lo && at.x <= s.hi) {
        throw InvalidInput(
            "PiecewiseCdf: atom inside a segment interval (only the left "
            "endpoint may carry a point mass)");
      }
    }
  }
  // Walk once: the CDF must be non-decreasing with no unexplained jumps.
  double running = 0.0;
  size_t ia = 0;
  for (const ReciprocalSegment& s : segments_) {
    while (ia < atoms_.size() && atoms_[ia].x <= s.lo) {
      running += atoms_[ia++].mass;
    }
    const double start = s.value_at(s.lo);
    if (std::abs(start - running) > kJoinTol) {
      throw InvalidInput(
          "PiecewiseCdf: segment start " + format_double(start) +
          " does not match the accumulated mass " + format_double(running));
    }
    running = s.value_at(s.hi);
  }
  while (ia < atoms_.size()) running += atoms_[ia++].mass;
  if (std::abs(running - 1.0) > kTopTol) {
    throw InvalidInput("PiecewiseCdf: F(top) = " + format_double(running) +
                       ", expected 1 within 1e-12");
  }
}

double PiecewiseCdf::eval(double x) const {
  if (!(x >= 0.0) || x > top_) {
    throw RangeError("PiecewiseCdf::eval: x outside [0, top]");
  }
  double running = 0.0;
  size_t ia = 0;
  for (const ReciprocalSegment& s : segments_) {
    while (ia < atoms_.size() && atoms_[ia].x <= s.lo) {
      if (x < atoms_[ia].x) return running;
      running += atoms_[ia++].mass;
    }
    if (x < s.lo) return running;
    if (x <= s.hi) return s.value_at(x);
    running = s.value_at(s.hi);
  }
  while (ia < atoms_.size()) {
    if (x < atoms_[ia].x) return running;
    running += atoms_[ia++].mass;
  }
  return running;
}

double PiecewiseCdf::inverse(double p) const {
  if (!(p >= 0.0) || p > 1.0) {
    throw RangeError("PiecewiseCdf::inverse: p outside [0, 1]");
  }
  if (p <= 0.0) return 0.0;
  double running = 0.0;
  size_t ia = 0;
  for (const ReciprocalSegment& s : segments_) {
    while (ia < atoms_.size() && atoms_[ia].x <= s.lo) {
      if (p <= running + atoms_[ia].mass) return atoms_[ia].x;
      running += atoms_[ia++].mass;
    }
    const double end = s.value_at(s.hi);
    if (p <= end) {
      return std::clamp(s.b - s.a / p, s.lo, s.hi);
    }
    running = end;
  }
  while (ia < atoms_.size()) {
    if (p <= running + atoms_[ia].mass) return atoms_[ia].x;
    running += atoms_[ia++].mass;
  }
  return top_;  // p exceeds the walked mass only by rounding slack
}

double PiecewiseCdf::expected_value() const {
  double total = 0.0;
  double running = 0.0;
  double cursor = 0.0;
  size_t ia = 0;
  for (const ReciprocalSegment& s : segments_) {
    while (ia < atoms_.size() && atoms_[ia].x <= s.lo) {
      total += (atoms_[ia].x - cursor) * (1.0 - running);
      cursor = atoms_[ia].x;
      running += atoms_[ia++].mass;
    }
    total += (s.lo - cursor) * (1.0 - running);
    total += (s.hi - s.lo) + s.a * std::log((s.b - s.hi) / (s.b - s.lo));
    cursor = s.hi;
    running = s.value_at(s.hi);
  }
  while (ia < atoms_.size()) {
    total += (atoms_[ia].x - cursor) * (1.0 - running);
    cursor = atoms_[ia].x;
    running += atoms_[ia++].mass;
  }
  total += (top_ - cursor) * (1.0 - running);
  return total;
}

double PiecewiseCdf::sup_deviation_utility(double value) const {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidInput("sup_deviation_utility: value must be finite and >= 0");
  }
  // (value - x) * F(x) is monotone between pieces and on each segment, so
  // the sup over [0, top] is attained at a piece endpoint.
  double best = (value - 0.0) * eval(0.0);
  auto consider = [&](double x) {
    best = std::max(best, (value - x) * eval(x));
  };
  for (const CdfAtom& at : atoms_) consider(at.x);
  for (const ReciprocalSegment& s : segments_) {
    consider(s.lo);
    consider(s.hi);
  }
  consider(top_);
  return best;
}

double PiecewiseCdf::atom_mass_at(double x) const {
  for (const CdfAtom& at : atoms_) {
    if (at.x == x) return at.mass;
  }
  return 0.0;
}

PiecewiseCdf min_envelope(double alpha, double beta, double v) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(v) ||
      !(alpha > 0.0) || alpha > 1.0 || !(beta > 0.0) || beta > v || v > 1.0) {
    throw InvalidInput(
        "min_envelope: need 0 < alpha <= 1 and 0 < beta <= v <= 1 (F(0) = "
        "min(alpha, beta/v) must not exceed 1)");
  }
  if (beta >= v * alpha) {
    // beta/(v-x) dominates everywhere: single alpha branch.
    return PiecewiseCdf({{0.0, alpha}}, {{alpha, 1.0, 0.0, 1.0 - alpha}},
                        1.0 - alpha);
  }
  const double theta = (v * alpha - beta) / (alpha - beta);
  if (theta >= v - beta) {
    // The beta branch reaches 1 before the branches cross (includes v = 1).
    return PiecewiseCdf({{0.0, beta / v}}, {{beta, v, 0.0, v - beta}},
                        v - beta);
  }
  return PiecewiseCdf({{0.0, beta / v}},
                      {{beta, v, 0.0, theta},
                       {alpha, 1.0, theta, 1.0 - alpha}},
                      1.0 - alpha);
}

}  // namespace aucteq
