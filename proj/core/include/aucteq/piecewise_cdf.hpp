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
// Winning-price distributions built from point masses and reciprocal
// segments F(x) = a/(b-x). Everything this library needs about such
// distributions has a closed form:
//   * mean via E[X] = integral of (1 - F):  a segment [l, r] contributes
//     (r - l) + a*ln((b-r)/(b-l));
//   * the best-response payoff (value - x)*F(x) is monotone on every
//     segment (its derivative has the sign of value - b), so suprema are
//     attained at piece endpoints;
//   * quantiles invert to x = b - a/p on a segment.

#ifndef AUCTEQ_PIECEWISE_CDF_HPP_
#define AUCTEQ_PIECEWISE_CDF_HPP_

#include <vector>

namespace aucteq {

struct CdfAtom {
  double x;     // price carrying the point mass
  double mass;  // > 0
};

// F(x) = a/(b - x) on [lo, hi]; requires a > 0, 0 <= lo <= hi < b and
// a/(b - hi) <= 1. The segment stores absolute CDF values, not increments.
struct ReciprocalSegment {
  double a;
  double b;
  double lo;
  double hi;

  double value_at(double x) const { return a / (b - x); }
};

// Right-continuous CDF on [0, top], composed of point masses and reciprocal
// segments with flat stretches in between. Invariants, enforced at
// construction:
//  * pieces are ordered and open-interval disjoint; an atom may sit at a
//    segment's left endpoint (it explains the jump up to the segment);
//  * the walked CDF is non-decreasing, every segment start matches the
//    running value within 1e-9 (no unexplained jumps);
//  * the value at top is 1 within 1e-12.
class PiecewiseCdf {
 public:
  PiecewiseCdf(std::vector<CdfAtom> atoms,
               std::vector<ReciprocalSegment> segments, double top);

  // F(x). Throws RangeError outside [0, top].
  double eval(double x) const;

  // Generalized inverse inf{x : F(x) >= p}; flat regions map to their left
  // endpoint. Throws RangeError outside [0, 1].
  double inverse(double p) const;

  // E[X] as the integral of (1 - F) over [0, top], in closed form.
  double expected_value() const;

  // sup over x in [0, top] of (value - x) * F(x): the payoff of deviating to
  // price x when ties go to the deviator. Monotonicity per piece reduces the
  // sup to finitely many endpoint evaluations.
  double sup_deviation_utility(double value) const;

  const std::vector<CdfAtom>& atoms() const { return atoms_; }
  const std::vector<ReciprocalSegment>& segments() const { return segments_; }
  double top() const { return top_; }

  // Point mass at exactly x (0 when none).
  double atom_mass_at(double x) const;

 private:
  std::vector<CdfAtom> atoms_;
  std::vector<ReciprocalSegment> segments_;
  double top_;
};

// Lower envelope F(x) = min{alpha/(1-x), beta/(v-x)} capped at 1, with its
// implied point mass F(0) at price 0. Requires 0 < alpha <= 1 and
// 0 < beta <= v <= 1. The two branches cross at
// theta = (v*alpha - beta)/(alpha - beta) when beta < v*alpha; when the
// beta-branch reaches 1 before theta the envelope degenerates to that single
// branch.
PiecewiseCdf min_envelope(double alpha, double beta, double v);

}  // namespace aucteq

#endif  // AUCTEQ_PIECEWISE_CDF_HPP_
