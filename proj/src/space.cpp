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

#include "greedy/space.hpp"

#include <cmath>
#include <sstream>

#include "greedy/error.hpp"
#include "greedy/kernels.hpp"

namespace greedy {

namespace {

constexpr double kUnitTol = 1e-9;

// (sum |x_i|^r)^{1/r}, scaled by max |x_i| so large or tiny entries do not
// overflow or flush to zero.
double lr_norm(std::span<const double> x, double r) {
  if (r == 2.0) return std::sqrt(kernels::sum_sq(x));
  const double m = kernels::max_abs(x);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v) / m, r);
  return m * std::pow(s, 1.0 / r);
}

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    fail(Errc::kDimensionMismatch,
         "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

SpaceSpec SpaceSpec::hilbert() { return SpaceSpec(SpaceKind::kHilbert, 2.0, 0.5, 2.0); }

SpaceSpec SpaceSpec::lq(double q) {
  require(std::isfinite(q) && q > 1.0, Errc::kInvalidArgument,
          "l_q exponent must lie in (1, inf)");
  if (q <= 2.0) return SpaceSpec(SpaceKind::kLq, q, 1.0 / q, q);
  return SpaceSpec(SpaceKind::kLq, q, (q - 1.0) / 2.0, 2.0);
}

SpaceSpec SpaceSpec::lq(double q, double gamma, double power) {
  require(std::isfinite(q) && q > 1.0, Errc::kInvalidArgument,
          "l_q exponent must lie in (1, inf)");
  require(std::isfinite(gamma) && gamma > 0.0, Errc::kInvalidArgument,
          "majorant gamma must be positive");
  require(power > 1.0 && power <= 2.0, Errc::kInvalidArgument,
          "majorant power must lie in (1, 2]");
  return SpaceSpec(SpaceKind::kLq, q, gamma, power);
}

std::string SpaceSpec::describe() const {
  std::ostringstream os;
  if (kind_ == SpaceKind::kHilbert) {
    os << "hilbert";
  } else {
    os << "l_" << q_;
  }
  os << " (mu(u) = " << gamma_ << " u^" << power_ << ")";
  return os.str();
}

Element::Element(std::vector<double> coeffs, SpaceSpec space)
    : coeffs_(std::move(coeffs)), space_(space) {
  require(!coeffs_.empty(), Errc::kInvalidArgument, "element must have n >= 1 coordinates");
  for (double v : coeffs_) {
    require(std::isfinite(v), Errc::kInvalidArgument, "element coordinates must be finite");
  }
}

Element Element::zeros(std::size_t n, SpaceSpec space) {
  return Element(std::vector<double>(n, 0.0), space);
}

Element Element::ones(std::size_t n, std::size_t k, SpaceSpec space) {
  require(k <= n, Errc::kInvalidArgument, "ones: k exceeds dimension");
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) c[i] = 1.0;
  return Element(std::move(c), space);
}

bool Element::is_zero() const {
  for (double v : coeffs_) {
    if (v != 0.0) return false;
  }
  return true;
}

Element Element::scaled(double a) const {
  std::vector<double> c(coeffs_);
  for (double& v : c) v *= a;
  return Element(std::move(c), space_);
}

double norm(std::span<const double> x, const SpaceSpec& space) {
  return lr_norm(x, space.q());
}

double dual_norm(std::span<const double> x, const SpaceSpec& space) {
  return lr_norm(x, space.dual_exponent());
}

void norming_functional(std::span<const double> x, const SpaceSpec& space,
                        std::span<double> out) {
  const double nx = norm(x, space);
  require(nx > 0.0, Errc::kZeroElement, "norming functional of the zero element");
  if (space.q() == 2.0) {
    const double inv = 1.0 / nx;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * inv;
    return;
  }
  const double e = space.q() - 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::pow(std::fabs(x[i]) / nx, e);
    out[i] = x[i] < 0.0 ? -r : (x[i] > 0.0 ? r : 0.0);
  }
}

double norm(const Element& f) { return norm(f.coeffs(), f.space()); }

double dual_norm(const DualFunctional& F) { return dual_norm(F.coeffs(), F.space()); }

double inner(const Element& f, const Element& g) {
  check_same_size(f.size(), g.size());
  require(f.space().has_inner_product() && g.space().has_inner_product(),
          Errc::kNotHilbert, "inner product requires a Hilbert space");
  return kernels::dot(f.coeffs(), g.coeffs());
}

DualFunctional norming_functional(const Element& f) {
  std::vector<double> out(f.size());
  norming_functional(f.coeffs(), f.space(), out);
  return DualFunctional(std::move(out), f.space());
}

double pair(const DualFunctional& F, const Element& g) {
  check_same_size(F.size(), g.size());
  return kernels::dot(F.coeffs(), g.coeffs());
}

double smoothness_majorant(double u, const SpaceSpec& space) {
  require(u >= 0.0, Errc::kInvalidArgument, "majorant argument must be >= 0");
  return space.majorant_gamma() * std::pow(u, space.majorant_power());
}

double empirical_modulus(const Element& x, const Element& y, double u) {
  check_same_size(x.size(), y.size());
  require(std::fabs(norm(x) - 1.0) <= kUnitTol && std::fabs(norm(y) - 1.0) <= kUnitTol,
          Errc::kNotUnit, "empirical modulus requires unit x and y");
  std::vector<double> plus(x.coeffs().begin(), x.coeffs().end());
  std::vector<double> minus(plus);
  kernels::axpy(u, y.coeffs(), plus);
  kernels::axpy(-u, y.coeffs(), minus);
  return 0.5 * (norm(plus, x.space()) + norm(minus, x.space())) - 1.0;
}

}  // namespace greedy
