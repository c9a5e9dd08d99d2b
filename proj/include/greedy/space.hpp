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

// Finite-dimensional Hilbert and l_q sequence spaces: norms, the Hilbert
// pairing, norming functionals and power-type majorants of the modulus of
// smoothness.

#include <span>
#include <string>
#include <vector>

namespace greedy {

enum class SpaceKind { kHilbert, kLq };

// Ambient space. Hilbert behaves as q = 2. The majorant mu(u) = gamma * u^power
// bounds the modulus of smoothness rho(u) from above.
class SpaceSpec {
 public:
  // Euclidean space, majorant u^2 / 2.
  static SpaceSpec hilbert();
  // l_q with the standard majorant: u^q / q for q <= 2, (q - 1) u^2 / 2 above.
  static SpaceSpec lq(double q);
  // l_q with an explicit majorant. Throws for q outside (1, inf), gamma <= 0
  // or power outside (1, 2].
  static SpaceSpec lq(double q, double gamma, double power);

  SpaceKind kind() const { return kind_; }
  double q() const { return q_; }
  // Conjugate exponent q / (q - 1).
  double dual_exponent() const { return q_ / (q_ - 1.0); }
  double majorant_gamma() const { return gamma_; }
  double majorant_power() const { return power_; }

  // True for Hilbert and for l_2, where the coordinate dot product is the
  // inner product.
  bool has_inner_product() const { return kind_ == SpaceKind::kHilbert || q_ == 2.0; }

  std::string describe() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  SpaceSpec(SpaceKind kind, double q, double gamma, double power)
      : kind_(kind), q_(q), gamma_(gamma), power_(power) {}

  SpaceKind kind_;
  double q_;
  double gamma_;
  double power_;
};

// A point of the working space: coordinates in the standard coordinate system.
class Element {
 public:
  // Throws for empty or non-finite coordinates.
  Element(std::vector<double> coeffs, SpaceSpec space);

  static Element zeros(std::size_t n, SpaceSpec space);
  // Sum of the first k unit coordinates in dimension n.
  static Element ones(std::size_t n, std::size_t k, SpaceSpec space);

  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  const SpaceSpec& space() const { return space_; }

  bool is_zero() const;

  Element scaled(double a) const;

 private:
  std::vector<double> coeffs_;
  SpaceSpec space_;
};

// A functional in the dual pairing, stored by its coordinates.
class DualFunctional {
 public:
  DualFunctional(std::vector<double> coeffs, SpaceSpec space)
      : coeffs_(std::move(coeffs)), space_(space) {}

  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  const SpaceSpec& space() const { return space_; }

 private:
  std::vector<double> coeffs_;
  SpaceSpec space_;
};

// Raw-coordinate norm in the given space. Used by the engines on their
// working buffers.
double norm(std::span<const double> x, const SpaceSpec& space);
// Norm in the dual space l_p, p = q / (q - 1).
double dual_norm(std::span<const double> x, const SpaceSpec& space);
// Norming functional coordinates written into out (same size as x); x != 0.
void norming_functional(std::span<const double> x, const SpaceSpec& space,
                        std::span<double> out);

double norm(const Element& f);
double dual_norm(const DualFunctional& F);

// Hilbert pairing; throws for dimension mismatch or non-Hilbert spaces.
double inner(const Element& f, const Element& g);

// F_f with ||F_f|| = 1 and F_f(f) = ||f||. Throws for f = 0.
DualFunctional norming_functional(const Element& f);

double pair(const DualFunctional& F, const Element& g);

// gamma * u^power. Throws for u < 0.
double smoothness_majorant(double u, const SpaceSpec& space);

// (||x + u y|| + ||x - u y||) / 2 - 1 for unit x, y. Throws kNotUnit if
// either norm differs from 1 by more than 1e-9.
double empirical_modulus(const Element& x, const Element& y, double u);

}  // namespace greedy
