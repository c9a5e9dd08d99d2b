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

// Exact best m-term approximation errors used as ground truth.

#include <cstddef>
#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/space.hpp"

namespace greedy {

struct SigmaResult {
  enum class Method { kSortedTail, kBruteForce };

  std::size_t m = 0;
  double value = 0.0;
  // Indices of the atoms in the best approximant, ascending.
  std::vector<std::size_t> support;
  Method method = Method::kSortedTail;
  // Brute force only: subsets whose Gram matrix was singular and that were
  // projected through a rank-revealing factorization instead.
  std::size_t degenerate_subsets = 0;
};

// sigma_m(f, E) for the standard basis in the element's space: the norm of
// the coefficients left after removing the m largest in magnitude (ties keep
// the lower index).
SigmaResult sigma_m_basis(const Element& f, std::size_t m);

// Hilbert space, any finite dictionary: min over m-subsets S of
// ||f - P_S f||. Throws kBudgetExceeded when binomial(N, m) > 2e5.
SigmaResult sigma_m_hilbert_bruteforce(const Element& f, const Dictionary& d, std::size_t m);

struct MonotoneBound {
  double bound = 0.0;  // m^{-alpha/p} ||f||_q^{1-alpha} ||f||_1^alpha
  double sigma = 0.0;  // sigma_m(f, E)_{l_q}
  bool holds = false;  // sigma <= bound + 1e-9
};

// l_q, q > 2, coefficients nonnegative and nonincreasing, alpha in [1/q, 1],
// m >= 1.
MonotoneBound monotone_coefficient_bound(const Element& f, std::size_t m, double alpha);

struct TrigDemo {
  std::size_t m = 0;
  double q = 0.0;
  std::size_t quad_points = 0;
  // Norms over (0, 2 pi) with Lebesgue measure.
  double lq_norm = 0.0;
  double l2_norm = 0.0;
  // Same norms for the normalized measure dx / (2 pi); on a probability
  // space the L_q norm dominates the L_2 norm.
  double lq_norm_normalized = 0.0;
  double l2_norm_normalized = 0.0;
  // sigma_m(f, T)_{L_2} = sqrt(m pi): m of the 2m orthogonal terms of energy
  // pi each remain.
  double l2_sigma_lower = 0.0;
  double a1 = 0.0;  // ||f||_{A1(T)} = 2m
  std::vector<double> alphas;
  // l2_sigma_lower / (lq_norm^{1-alpha} a1^alpha) for each alpha.
  std::vector<double> ratios;
};

// f(x) = sum_{k=1}^{2m} cos(2^k x), composite trapezoid rule on a uniform
// grid of quad_points nodes. Needs q > 2, 1 <= m <= 6 and
// quad_points >= 2^{2m+3}.
TrigDemo trig_lacunary_demo(std::size_t m, double q, std::size_t quad_points);

}  // namespace greedy
