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

#include "aucteq/bounds.hpp"

#include <cmath>
#include <string>

#include "aucteq/errors.hpp"
#include "aucteq/numeric.hpp"
#include "aucteq/piecewise_cdf.hpp"

namespace aucteq {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidInput("alpha must lie in (0, 1), got " +
                       format_double(alpha));
  }
}

}  // namespace

double BoundResult::arg(const std::string& name) const {
  for (const auto& [key, value] : args) {
    if (key == name) return value;
  }
  throw InvalidInput("bound has no argument named " + name);
}

double beta_of_alpha(double alpha) {
  check_alpha(alpha);
  return (alpha - alpha * alpha) / (kE * alpha - alpha + 1.0);
}

double welfare_lb_one_segment(double alpha, double beta) {
  check_alpha(alpha);
  // Envelope: atom alpha at 0, then F(x) = alpha/(1-x) up to 1-alpha.
  // Mean = integral of 1-F = 1 - alpha + alpha*ln(alpha).
  return 1.0 - alpha + alpha * std::log(alpha) + alpha + beta;
}

double welfare_lb_two_segments(double alpha, double beta, double v) {
  check_alpha(alpha);
  if (!(beta > 0.0 && beta < v * alpha)) {
    throw InvalidInput("two-segment branch needs 0 < beta < v*alpha");
  }
  // Crossover of beta/(v-x) and alpha/(1-x).
  const double theta = (v * alpha - beta) / (alpha - beta);
  // Mean = theta + beta*ln((v-theta)/v) + (1-alpha) - theta
  //        + alpha*ln(alpha/(1-theta)).
  const double mean = theta + beta * std::log((v - theta) / v) +
                      (1.0 - alpha - theta) +
                      alpha * std::log(alpha / (1.0 - theta));
  return mean + alpha + beta;
}

double welfare_lb(double alpha, double beta, double v) {
  check_alpha(alpha);
  if (!(beta > 0.0 && beta <= v && v <= 1.0)) {
    throw InvalidInput("need 0 < beta <= v <= 1");
  }
  if (beta >= v * alpha) return welfare_lb_one_segment(alpha, beta);
  return welfare_lb_two_segments(alpha, beta, v);
}

double worst_welfare_curve(double alpha) {
  check_alpha(alpha);
  return alpha * std::log(kE * alpha / ((kE - 1.0) * alpha + 1.0)) + 1.0;
}

double single_segment_welfare_curve(double alpha) {
  check_alpha(alpha);
  return 1.0 + alpha * (1.0 - alpha) + alpha * std::log(alpha);
}

double q_of_alpha(double alpha) {
  check_alpha(alpha);
  return 2.0 + std::log(alpha / (1.0 + (kE - 1.0) * alpha));
}

double crossover(double alpha) {
  check_alpha(alpha);
  return (kE - 1.0) * (1.0 - alpha) / kE;
}

BoundResult minimize_welfare() {
  // d/dx worst_welfare_curve, times ((e-1)x+1) to clear the pole.
  auto stat = [](double x) {
    const double g = kE * x / ((kE - 1.0) * x + 1.0);
    return ((kE - 1.0) * x + 1.0) * std::log(g) + 1.0;
  };
  const double alpha = bisect(stat, 0.2, 0.35);
  const double beta = beta_of_alpha(alpha);
  const double v = 1.0 - alpha;
  const double w = worst_welfare_curve(alpha);

  // Stationary point of the one-segment curve: 2x - ln x - 2 = 0.
  auto single_stat = [](double x) { return 2.0 * x - std::log(x) - 2.0; };
  const double single_alpha = bisect(single_stat, 0.1, 0.35);
  const double single_w = single_segment_welfare_curve(single_alpha);

  BoundResult out;
  out.value = w;
  out.residual = stat(alpha);
  out.args = {
      {"alpha", alpha},
      {"beta", beta},
      {"v", v},
      {"q", q_of_alpha(alpha)},
      {"single_alpha", single_alpha},
      {"single_welfare", single_w},
  };
  return out;
}

UtilityBounds u_bounds(double alpha) {
  check_alpha(alpha);
  const double q = q_of_alpha(alpha);
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidInput("q(alpha) outside (0, 1); alpha = " +
                       format_double(alpha));
  }
  const double beta = beta_of_alpha(alpha);
  const double v = 1.0 - alpha;
  UtilityBounds out;
  out.u_min = -alpha * std::log(1.0 - q);
  out.u_max = q - v * q + beta - beta * std::log(beta / (q * v));
  out.alpha_in_certified_range = (alpha >= 0.27 && alpha <= 0.28);
  return out;
}

double revenue_floor() { return 1.0 - 2.0 / kE; }

double symmetric_alpha(int n, double v) {
  if (n < 2) throw InvalidInput("need at least two players");
  if (!(v > 0.0)) throw InvalidInput("common value must be positive");
  return v / std::pow(kE, n - 1);
}

double symmetric_revenue_bound(int n, double v) {
  if (n < 2) throw InvalidInput("need at least two players");
  if (!(v > 0.0)) throw InvalidInput("common value must be positive");
  return v * (1.0 - n / std::pow(kE, n - 1));
}

double revenue_lb_rhs(double alpha, double v) {
  if (!(v >= 1.0)) throw InvalidInput("need v >= 1");
  if (!(alpha > 0.0)) throw InvalidInput("need alpha > 0");
  const double c = (1.0 - 1.0 / kE) * (v - 1.0) + alpha;
  if (!(c <= v)) throw InvalidInput("utility too large for value gap");
  return v - c + c * std::log(c / v);
}

double gap_threshold(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidInput("eps must lie in (0, 1)");
  }
  const double e2 = eps * eps;
  return 324.0 / (e2 * e2);
}

}  // namespace aucteq
