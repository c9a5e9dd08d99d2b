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

#pragma once

// Closed-form rate bounds for the greedy expansions, their exponent
// thresholds, and the two elementary lemmas the rates rest on.

#include <cstddef>
#include <span>

namespace greedy::bounds {

// Tolerance used when comparing alpha against a threshold.
inline constexpr double kAlphaSlack = 1e-12;

// (1 + b (2 - b) sum_{k<=m} t_k^2)^{-(2 - b) t_m / (2 (2 + (2 - b) t_m))}
// for nonincreasing tau in (0, 1], b in (0, 1], m >= 1, tau.size() >= m.
double e_m_tau_b(std::span<const double> tau, double b, std::size_t m);

// Largest alpha covered by the weak greedy bound: (2 - b) t / ((2 - b) t + 2).
double alpha0_hilbert(double t, double b);

enum class WgaBase {
  // 1 + m b (2 - b) t^2. Default.
  kSquared,
  // 1 + m b (2 - b) t. Same at t = 1, stronger below; kept for comparison,
  // not asserted anywhere.
  kLinear,
};

// (1 + m b (2 - b) t^2)^{-alpha/2}. Throws kAboveThreshold for
// alpha > alpha0_hilbert(t, b).
double wga_alpha_bound(std::size_t m, double t, double b, double alpha,
                       WgaBase base = WgaBase::kSquared);

// m^{-alpha/2}, m >= 1, alpha in [0, 1].
double oga_alpha_bound(std::size_t m, double alpha);

// t (1 - b) / (1 + t (1 - b)).
double alpha0_banach(double t, double b);

// c = (1 - b) (b / (2 gamma))^{1/(q-1)} with p = q / (q - 1).
double dga_rate_constant(double b, double q, double gamma);

// (1 + m c t^p)^{-alpha/p}. q in (1, 2] is the majorant power; throws
// kAboveThreshold for alpha > alpha0_banach(t, b).
double dga_alpha_bound(std::size_t m, double t, double b, double q, double gamma, double alpha);

// (C1^{-1} + C2 m)^{-1}.
double hl1_bound(double c1, double c2, std::size_t m);

// Exponent transfer: from g_m(beta) <= C phi(m)^{-beta/2} to
// g_m(alpha) <= C^{alpha/beta} phi(m)^{-alpha/2}, 0 < alpha < beta <= 1.
double hl2_transfer(double c, double beta, double alpha, double phi_m);

struct Hl1Check {
  // x_m >= 0, x_0 <= C1 and x_{m+1} <= x_m (1 - x_m C2) for all m.
  bool hypothesis = false;
  // x_m <= hl1_bound(C1, C2, m) for all m; only evaluated when the
  // hypothesis holds.
  bool conclusion = false;

  bool ok() const { return hypothesis && conclusion; }
};

Hl1Check check_hl1_recursion(std::span<const double> xs, double c1, double c2);

// (1 - x)(1 + x/a)^a <= 1 with 1e-12 slack, for x < 1, a > 0 and x >= -a
// (the power is undefined for 1 + x/a < 0 and non-integer a).
bool check_concavity_inequality(double x, double a);

}  // namespace greedy::bounds
