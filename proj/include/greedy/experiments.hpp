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

// Reproductions of the lower-bound constructions and sweeps that compare
// empirical interpolated ratios ||f_m|| / (||f||^{1-alpha} ||f||_{A1}^alpha)
// against the closed-form rate bounds. Every PASS/FAIL is a direct
// inequality check with kSlack absolute slack.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedy/dictionary.hpp"
#include "greedy/greedy_banach.hpp"
#include "greedy/space.hpp"

namespace greedy::experiments {

inline constexpr double kSlack = 1e-9;

struct RatioPoint {
  std::size_t m = 0;
  double alpha = 0.0;
  double empirical = 0.0;
  // NaN when absent.
  double upper = kNaN;
  double lower = kNaN;
  bool pass = true;

  // Sets pass from the bracket lower - kSlack <= empirical <= upper + kSlack.
  void evaluate();
};

// A scalar invariant measured during an experiment: pass iff value <= limit.
struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool pass = true;
};

struct ExperimentReport {
  std::string id;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<RatioPoint> points;
  std::vector<Check> checks;
  bool pass = true;
  double runtime_seconds = 0.0;

  void add_check(std::string name, double value, double limit);
  // pass = every point and every check passes.
  void finalize();
};

// ||residual|| / (||f||^{1-alpha} a1^alpha). Throws for f = 0 or
// a1 < ||f|| beyond kSlack.
double ratio(const Element& f, const Element& residual, double a1, double alpha);
double ratio_from_norms(double residual_norm, double f_norm, double a1, double alpha);

// {0, 0.1, ..., } below a0, plus a0 itself.
std::vector<double> alpha_grid_upto(double a0);
// {0, 0.25, 0.5, 0.75, 1}.
std::vector<double> quarter_grid();

// f = e_1 + ... + e_{m'} with m' = floor(2 b m) + 1, WGA(1, b) for m steps.
// Lower bound (m')^{-alpha/2} / 4 at every alpha of the quarter grid; the
// weak greedy upper bound is attached where alpha <= alpha0. Checks that
// every coefficient stays above 1 - (m/m' + 1) b and above 1/4.
ExperimentReport construction_I(double b, std::size_t m);

// f = e_1 + ... + e_{2m}, WGA(1, b) for m steps, b in (1/4, 1]. Lower bound
// 2^{-1/2} (2m)^{-alpha/2}; checks that exactly m coordinates were touched,
// once each.
ExperimentReport construction_II(double b, std::size_t m);

enum class DictionaryFamily {
  kStandardBasis,
  // Random unit atoms; exact A1 by LP, so dimension stays <= 12.
  kRedundant,
  // Alternate the two, trial by trial.
  kMixed,
};

struct WgaSweepConfig {
  double t = 1.0;
  double b = 1.0;
  std::size_t max_dim = 64;
  std::size_t m_max = 200;
  std::size_t trials = 50;
  // Cycled trial by trial.
  std::vector<SelectionMode::Kind> modes{SelectionMode::Kind::kExact};
  DictionaryFamily family = DictionaryFamily::kStandardBasis;
  std::uint64_t seed = 1;
};

// Random sparse f, WGA(t, b); asserts the ratio at alpha0_hilbert(t, b) and
// every grid alpha below it stays under the weak greedy bound at every m.
// Points carry the maximum ratio over trials. Also checks the energy
// identity, weak-selection guarantee, envelope recursion, the
// y_m >= t a_{m-1} / B_{m-1} bound, residual monotonicity and expansion
// consistency.
ExperimentReport wga_upper_sweep(const WgaSweepConfig& cfg);

struct OgaSweepConfig {
  std::size_t max_dim = 32;
  std::size_t m_max = 64;
  std::size_t trials = 200;
  DictionaryFamily family = DictionaryFamily::kMixed;
  std::uint64_t seed = 2;
};

// Random convex combinations of +-atoms (a1 <= 1 by construction, exact
// when the LP budget allows). Asserts ||f_m|| <= m^{-alpha/2}
// ||f||^{1-alpha} a1^alpha for alpha in {0.25, 0.5, 0.75, 1} and residual
// orthogonality to the active atoms.
ExperimentReport oga_upper_sweep(const OgaSweepConfig& cfg);

struct DgaSweepConfig {
  double q = 1.5;
  // NaN selects the standard majorant of l_q.
  double gamma = kNaN;
  double t = 1.0;
  double b = 0.5;
  DgaVariant variant = DgaVariant::kRD;
  std::size_t max_dim = 64;
  std::size_t m_max = 200;
  std::size_t trials = 20;
  std::vector<SelectionMode::Kind> modes{SelectionMode::Kind::kExact};
  std::uint64_t seed = 3;
};

// Standard basis in l_q, q in (1, 2]. Asserts the dual greedy bound at
// alpha0_banach and alpha0 / 2, plus the per-step residual decrease,
// envelope, r_D lower bound, Lyapunov product and step-size equation. When
// q = 2, gamma = 1/2, t = 1 and the variant is kStar, also cross-checks
// against WGA(1, b).
ExperimentReport dga_upper_sweep(const DgaSweepConfig& cfg);

// DGA(1, b, u^2/2)* against WGA(1, b) on random orthonormal instances:
// selections identical, coefficients within 1e-10.
ExperimentReport hilbert_specialization(std::size_t trials, std::uint64_t seed);

// f = e_1 + ... + e_{2m} in l_q, q in (1, 2]; asserts
// sigma_m / (||f||^{1-alpha} ||f||_{A1}^alpha) >= m^{-alpha/p} / 2.
ExperimentReport lq_lower_bound_experiment(double q, const std::vector<std::size_t>& ms);

// Random nonincreasing nonnegative f in l_q, q > 2; asserts the sigma_m
// ratio stays under m^{-alpha/p} for alpha in {1/q, (1/q + 1)/2, 1}.
ExperimentReport monotone_upper_sweep(double q, std::size_t trials, std::uint64_t seed);

// Randomized sequences satisfying the recursion hypothesis; all must meet
// the conclusion.
ExperimentReport hl1_property_suite(std::size_t instances, std::uint64_t seed);

// Randomized (x, a) with x in (-10, 1), a in (0, 10], x >= -a.
ExperimentReport concavity_property_suite(std::size_t instances, std::uint64_t seed);

// Quadrature L_2 norm against sqrt(2 m pi) (1e-6) and L_q >= L_2 under the
// normalized measure.
ExperimentReport trig_demo_experiment(const std::vector<std::size_t>& ms, double q);

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t threads = 1;
};

// Every experiment above with the acceptance-scale parameters. Reports come
// back in declaration order regardless of the thread count.
std::vector<ExperimentReport> run_all(const SuiteConfig& cfg);

}  // namespace greedy::experiments
