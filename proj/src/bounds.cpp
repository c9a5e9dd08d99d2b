// Copyright 2026 The greedy-rates Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "greedy/bounds.hpp"

#include <cmath>
#include <string>

#include "greedy/error.hpp"

namespace greedy::bounds {

namespace {

void check_t(double t) {
  require(t > 0.0 && t <= 1.0, Errc::kInvalidArgument, "t must lie in (0, 1]");
}

void check_alpha(double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, Errc::kInvalidArgument, "alpha must lie in [0, 1]");
}

}  // namespace

double e_m_tau_b(std::span<const double> tau, double b, std::size_t m) {
  require(m >= 1, Errc::kInvalidArgument, "e_m needs m >= 1");
  require(tau.size() >= m, Errc::kInvalidArgument, "tau shorter than m");
  require(b > 0.0 && b <= 1.0, Errc::kInvalidArgument, "b must lie in (0, 1]");
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    check_t(tau[k]);
    require(k == 0 || tau[k] <= tau[k - 1], Errc::kInvalidArgument, "tau must be nonincreasing");
    sum += tau[k] * tau[k];
  }
  const double tm = tau[m - 1];
  const double w = (2.0 - b) * tm;
  return std::pow(1.0 + b * (2.0 - b) * sum, -w / (2.0 * (2.0 + w)));
}

double alpha0_hilbert(double t, double b) {
  require(b > 0.0 && b <= 1.0, Errc::kInvalidArgument, "b must lie in (0, 1]");
  require(t >= 0.0 && t <= 1.0, Errc::kInvalidArgument, "t must lie in [0, 1]");
  const double w = (2.0 - b) * t;
  return w / (w + 2.0);
}

double wga_alpha_bound(std::size_t m, double t, double b, double alpha, WgaBase base) {
  check_t(t);
  check_alpha(alpha);
  const double a0 = alpha0_hilbert(t, b);
  require(alpha <= a0 + kAlphaSlack, Errc::kAboveThreshold,
          "alpha " + std::to_string(alpha) + " exceeds alpha0 " + std::to_string(a0));
  const double tt = base == WgaBase::kSquared ? t * t : t;
  return std::pow(1.0 + static_cast<double>(m) * b * (2.0 - b) * tt, -alpha / 2.0);
}

double oga_alpha_bound(std::size_t m, double alpha) {
  require(m >= 1, Errc::kInvalidArgument, "OGA bound needs m >= 1");
  check_alpha(alpha);
  return std::pow(static_cast<double>(m), -alpha / 2.0);
}

double alpha0_banach(double t, double b) {
  require(b > 0.0 && b <= 1.0, Errc::kInvalidArgument, "b must lie in (0, 1]");
  require(t >= 0.0 && t <= 1.0, Errc::kInvalidArgument, "t must lie in [0, 1]");
  const double w = t * (1.0 - b);
  return w / (1.0 + w);
}

double dga_rate_constant(double b, double q, double gamma) {
  require(q > 1.0 && q <= 2.0, Errc::kInvalidArgument, "majorant power q must lie in (1, 2]");
  require(gamma > 0.0, Errc::kInvalidArgument, "gamma must be positive");
  require(b > 0.0 && b < 1.0, Errc::kInvalidArgument, "b must lie in (0, 1)");
  return (1.0 - b) * std::pow(b / (2.0 * gamma), 1.0 / (q - 1.0));
}

double dga_alpha_bound(std::size_t m, double t, double b, double q, double gamma, double alpha) {
  check_t(t);
  check_alpha(alpha);
  const double c = dga_rate_constant(b, q, gamma);
  const double a0 = alpha0_banach(t, b);
  require(alpha <= a0 + kAlphaSlack, Errc::kAboveThreshold,
          "alpha " + std::to_string(alpha) + " exceeds alpha0 " + std::to_string(a0));
  const double p = q / (q - 1.0);
  return std::pow(1.0 + static_cast<double>(m) * c * std::pow(t, p), -alpha / p);
}

double hl1_bound(double c1, double c2, std::size_t m) {
  require(c1 > 0.0 && c2 > 0.0, Errc::kInvalidArgument, "C1 and C2 must be positive");
  return 1.0 / (1.0 / c1 + c2 * static_cast<double>(m));
}

double hl2_transfer(double c, double beta, double alpha, double phi_m) {
  require(alpha > 0.0 && alpha <= beta && beta <= 1.0, Errc::kInvalidArgument,
          "exponent transfer needs 0 < alpha <= beta <= 1");
  require(phi_m > 0.0, Errc::kInvalidArgument, "phi(m) must be positive");
  require(c > 0.0, Errc::kInvalidArgument, "C must be positive");
  return std::pow(c, alpha / beta) * std::pow(phi_m, -alpha / 2.0);
}

Hl1Check check_hl1_recursion(std::span<const double> xs, double c1, double c2) {
  require(c1 > 0.0 && c2 > 0.0, Errc::kInvalidArgument, "C1 and C2 must be positive");
  Hl1Check out;
  out.hypothesis = true;
  for (std::size_t m = 0; m < xs.size(); ++m) {
    if (!(xs[m] >= 0.0)) out.hypothesis = false;
    if (m == 0 && xs[0] > c1) out.hypothesis = false;
    if (m + 1 < xs.size() && xs[m + 1] > xs[m] * (1.0 - xs[m] * c2)) out.hypothesis = false;
  }
  if (!out.hypothesis) return out;
  out.conclusion = true;
  for (std::size_t m = 0; m < xs.size(); ++m) {
    const double bound = hl1_bound(c1, c2, m);
    if (xs[m] > bound * (1.0 + 1e-12)) out.conclusion = false;
  }
  return out;
}

bool check_concavity_inequality(double x, double a) {
  require(x < 1.0, Errc::kInvalidArgument, "x must be < 1");
  require(a > 0.0, Errc::kInvalidArgument, "a must be > 0");
  require(x >= -a, Errc::kInvalidArgument, "1 + x/a must be nonnegative");
  const double lhs = (1.0 - x) * std::pow(1.0 + x / a, a);
  return lhs <= 1.0 + 1e-12;
}

}  // namespace greedy::bounds
