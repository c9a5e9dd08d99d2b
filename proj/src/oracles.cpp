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

#include "greedy/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

#include "greedy/error.hpp"
#include "greedy/kernels.hpp"

namespace greedy {

namespace {

constexpr double kGramPivot = 1e-12;
constexpr double kSubsetBudget = 2e5;

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(r);
}

}  // namespace

SigmaResult sigma_m_basis(const Element& f, std::size_t m) {
  const std::size_t n = f.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(f[a]) > std::fabs(f[b]);
  });
  SigmaResult res;
  res.m = m;
  res.method = SigmaResult::Method::kSortedTail;
  const std::size_t keep = std::min(m, n);
  res.support.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
  std::sort(res.support.begin(), res.support.end());
  if (keep == n) {
    res.value = 0.0;
    return res;
  }
  std::vector<double> tail;
  tail.reserve(n - keep);
  for (std::size_t i = keep; i < n; ++i) tail.push_back(f[order[i]]);
  res.value = norm(tail, f.space());
  return res;
}

SigmaResult sigma_m_hilbert_bruteforce(const Element& f, const Dictionary& d, std::size_t m) {
  require(f.space().has_inner_product() && d.space().has_inner_product(), Errc::kNotHilbert,
          "brute-force sigma_m needs a Hilbert space");
  require(f.size() == d.dimension(), Errc::kDimensionMismatch, "sigma_m: dimension mismatch");
  const std::size_t N = d.size();
  const std::size_t k = std::min(m, N);
  require(binomial(N, k) <= kSubsetBudget, Errc::kBudgetExceeded,
          "brute-force sigma_m would enumerate more than 2e5 subsets");

  SigmaResult res;
  res.m = m;
  res.method = SigmaResult::Method::kBruteForce;
  res.value = norm(f);
  if (k == 0) return res;

  const auto n = static_cast<Eigen::Index>(d.dimension());
  Eigen::MatrixXd atoms(n, static_cast<Eigen::Index>(N));
  {
    std::vector<double> g(d.dimension());
    for (std::size_t j = 0; j < N; ++j) {
      d.atom_coeffs(j, g);
      atoms.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXd>(g.data(), n);
    }
  }
  const Eigen::Map<const Eigen::VectorXd> fv(f.coeffs().data(), n);
  const Eigen::MatrixXd full_gram = atoms.transpose() * atoms;
  const Eigen::VectorXd full_rhs = atoms.transpose() * fv;

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  const auto kk = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd gram(kk, kk);
  Eigen::VectorXd rhs(kk);
  Eigen::MatrixXd sub(n, kk);
  for (;;) {
    for (Eigen::Index i = 0; i < kk; ++i) {
      const auto ii = static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]);
      rhs(i) = full_rhs(ii);
      sub.col(i) = atoms.col(ii);
      for (Eigen::Index j = 0; j < kk; ++j) {
        gram(i, j) = full_gram(ii, static_cast<Eigen::Index>(idx[static_cast<std::size_t>(j)]));
      }
    }
    Eigen::VectorXd coef;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() == Eigen::Success && ldlt.vectorD().cwiseAbs().minCoeff() >= kGramPivot) {
      coef = ldlt.solve(rhs);
    } else {
      ++res.degenerate_subsets;
      coef = sub.completeOrthogonalDecomposition().solve(fv);
    }
    const double err = (fv - sub * coef).norm();
    if (err < best) {
      best = err;
      res.support = idx;
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == N - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  res.value = best;
  return res;
}

MonotoneBound monotone_coefficient_bound(const Element& f, std::size_t m, double alpha) {
  const SpaceSpec& space = f.space();
  require(space.kind() == SpaceKind::kLq && space.q() > 2.0, Errc::kInvalidArgument,
          "monotone coefficient bound needs l_q with q > 2");
  require(m >= 1, Errc::kInvalidArgument, "monotone coefficient bound needs m >= 1");
  const double q = space.q();
  require(alpha >= 1.0 / q - 1e-12 && alpha <= 1.0, Errc::kInvalidArgument,
          "alpha must lie in [1/q, 1]");
  for (std::size_t i = 0; i < f.size(); ++i) {
    require(f[i] >= 0.0, Errc::kUnsorted, "coefficients must be nonnegative");
    require(i == 0 || f[i] <= f[i - 1], Errc::kUnsorted, "coefficients must be nonincreasing");
  }
  const double p = space.dual_exponent();
  MonotoneBound out;
  out.bound = std::pow(static_cast<double>(m), -alpha / p) * std::pow(norm(f), 1.0 - alpha) *
              std::pow(kernels::sum_abs(f.coeffs()), alpha);
  out.sigma = sigma_m_basis(f, m).value;
  out.holds = out.sigma <= out.bound + 1e-9;
  return out;
}

TrigDemo trig_lacunary_demo(std::size_t m, double q, std::size_t quad_points) {
  require(q > 2.0 && std::isfinite(q), Errc::kInvalidArgument, "trig demo needs q > 2");
  require(m >= 1 && m <= 6, Errc::kInvalidArgument, "trig demo supports 1 <= m <= 6");
  const std::size_t need = std::size_t{1} << (2 * m + 3);
  require(quad_points >= need, Errc::kResolution,
          "quadrature needs at least 2^(2m+3) = " + std::to_string(need) + " points");

  const double two_pi = 2.0 * std::numbers::pi;
  const double h = two_pi / static_cast<double>(quad_points);
  double sq = 0.0;
  double sqq = 0.0;
  for (std::size_t j = 0; j < quad_points; ++j) {
    const double x = h * static_cast<double>(j);
    double v = 0.0;
    for (std::size_t k = 1; k <= 2 * m; ++k) v += std::cos(std::ldexp(x, static_cast<int>(k)));
    sq += v * v;
    sqq += std::pow(std::fabs(v), q);
  }

  TrigDemo out;
  out.m = m;
  out.q = q;
  out.quad_points = quad_points;
  out.l2_norm = std::sqrt(h * sq);
  out.lq_norm = std::pow(h * sqq, 1.0 / q);
  out.l2_norm_normalized = std::sqrt(sq / static_cast<double>(quad_points));
  out.lq_norm_normalized = std::pow(sqq / static_cast<double>(quad_points), 1.0 / q);
  out.l2_sigma_lower = std::sqrt(static_cast<double>(m) * std::numbers::pi);
  out.a1 = static_cast<double>(2 * m);
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    out.alphas.push_back(alpha);
    out.ratios.push_back(out.l2_sigma_lower /
                         (std::pow(out.lq_norm, 1.0 - alpha) * std::pow(out.a1, alpha)));
  }
  return out;
}

}  // namespace greedy
