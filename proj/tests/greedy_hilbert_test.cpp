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

#include "greedy/greedy_hilbert.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "greedy/error.hpp"
#include "greedy/kernels.hpp"
#include "test_support.hpp"

namespace greedy {
namespace {

const SpaceSpec kH = SpaceSpec::hilbert();

// Oracle: exact-mode WGA on the standard basis written directly on the
// coordinates (largest |c_i|, lowest index on ties, shrink by 1 - b).
std::vector<double> basis_wga_oracle(std::vector<double> c, std::size_t m, double b) {
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (std::fabs(c[i]) > std::fabs(c[k])) k = i;
    }
    c[k] *= 1.0 - b;
  }
  return c;
}

std::vector<std::vector<double>> gaussian_atoms(std::mt19937_64& rng, std::size_t n,
                                                std::size_t count) {
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> atoms(count, std::vector<double>(n));
  for (auto& a : atoms) {
    double s = 0.0;
    for (double& v : a) {
      v = g(rng);
      s += v * v;
    }
    for (double& v : a) v /= std::sqrt(s);
  }
  return atoms;
}

TEST(Wga, FourOnesPureSteps) {
  const Dictionary d = Dictionary::standard_basis(4, kH);
  const GreedyTrace tr = run_wga(Element::ones(4, 4, kH), d, 2, 1.0, 1.0);
  ASSERT_EQ(tr.records.size(), 2U);
  EXPECT_EQ(tr.records[0].selection.atom_index, 0U);
  EXPECT_EQ(tr.records[1].selection.atom_index, 1U);
  EXPECT_DOUBLE_EQ(tr.records[1].residual_norm, std::sqrt(2.0));
}

TEST(Wga, ShrunkOnesHandTrace) {
  const Dictionary d = Dictionary::standard_basis(3, kH);
  const Element f = Element::ones(3, 3, kH);
  const GreedyTrace tr = run_wga(f, d, 4, 1.0, 0.25, SelectionMode::exact(), 3.0);
  const auto oracle = basis_wga_oracle({1.0, 1.0, 1.0}, 4, 0.25);
  const std::vector<double> frozen{0.5625, 0.75, 0.75};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(tr.residual[i], oracle[i]);
    EXPECT_EQ(tr.residual[i], frozen[i]);
  }
  // sqrt(0.5625^2 + 2 * 0.75^2) = sqrt(1.44140625)
  EXPECT_NEAR(tr.records.back().residual_norm, 1.2005857945186591, 1e-15);
  EXPECT_LE(energy_identity_check(tr), 1e-12);
  EXPECT_DOUBLE_EQ(tr.envelope_at(4), 3.0 + 0.25 * (1.0 + 1.0 + 1.0 + 0.75));
}

TEST(Wga, ZeroInputGivesInactiveTrace) {
  const Dictionary d = Dictionary::standard_basis(3, kH);
  const GreedyTrace tr = run_wga(Element::zeros(3, kH), d, 5, 0.5, 0.5);
  ASSERT_EQ(tr.records.size(), 5U);
  for (const auto& r : tr.records) {
    EXPECT_FALSE(r.active);
    EXPECT_EQ(r.residual_norm, 0.0);
  }
}

TEST(Wga, RejectsBadParameters) {
  const Dictionary d = Dictionary::standard_basis(2, kH);
  const Element f({1.0, 2.0}, kH);
  EXPECT_THROW(run_wga(f, d, 1, 0.0, 0.5), Error);
  EXPECT_THROW(run_wga(f, d, 1, 1.5, 0.5), Error);
  EXPECT_THROW(run_wga(f, d, 1, 1.0, 0.0), Error);
  EXPECT_THROW(run_wga(f, d, 1, 1.0, 1.5), Error);
  EXPECT_THROW(run_wga(Element({1.0, 2.0, 3.0}, kH), d, 1, 1.0, 1.0), Error);
  const SpaceSpec l = SpaceSpec::lq(1.5);
  EXPECT_THROW(run_wga(Element({1.0, 2.0}, l), Dictionary::standard_basis(2, l), 1, 1.0, 1.0), Error);
}

TEST(Wga, MatchesCoordinateOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 20;
    const double b = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
    const auto c = testing::random_nonzero(rng, n);
    const GreedyTrace tr = run_wga(Element(c, kH), Dictionary::standard_basis(n, kH), 30, 1.0, b);
    const auto oracle = basis_wga_oracle(c, 30, b);
    for (std::size_t k = 0; k < n; ++k) ASSERT_NEAR(tr.residual[k], oracle[k], 1e-14);
  }
}

TEST(Wga, EnergyIdentityWithUnitShrink) {
  const GreedyTrace tr =
      run_wga(Element({0.5, -0.25, 0.125}, kH), Dictionary::standard_basis(3, kH), 3, 1.0, 1.0);
  for (std::size_t m = 1; m <= 3; ++m) {
    const double y = tr.records[m - 1].y;
    EXPECT_NEAR(tr.residual_norm_at(m) * tr.residual_norm_at(m),
                tr.residual_norm_at(m - 1) * tr.residual_norm_at(m - 1) - y * y, 1e-16);
  }
}

TEST(Pga, Examples) {
  const Dictionary d = Dictionary::standard_basis(2, kH);
  const GreedyTrace a = run_pga(Element({2.0, 1.0}, kH), d, 1);
  EXPECT_EQ(a.residual[0], 0.0);
  EXPECT_EQ(a.residual[1], 1.0);
  const GreedyTrace b = run_pga(Element({1.0, 1.0}, kH), d, 2);
  EXPECT_TRUE(b.residual.is_zero());
  EXPECT_EQ(b.algorithm, Algorithm::kPga);
}

TEST(Oga, Examples) {
  const Dictionary d = Dictionary::standard_basis(2, kH);
  const GreedyTrace tr = run_oga(Element({2.0, 1.0}, kH), d, 2);
  EXPECT_DOUBLE_EQ(tr.records[0].residual_norm, 1.0);
  EXPECT_EQ(tr.records[1].residual_norm, 0.0);
  EXPECT_TRUE(tr.residual.is_zero());
}

TEST(Oga, TerminatesWithinDimension) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 6;
    const Dictionary d = Dictionary::from_atoms(gaussian_atoms(rng, n, n + 3), kH);
    const Element f(testing::random_nonzero(rng, n), kH);
    const GreedyTrace tr = run_oga(f, d, n + 4);
    EXPECT_LE(tr.residual_norm_at(n), 1e-12 * norm(f));
  }
}

TEST(Oga, DiagonalAtomSpansInOneStep) {
  const double r = 1.0 / std::sqrt(2.0);
  const Dictionary d = Dictionary::from_atoms({{1.0, 0.0}, {0.0, 1.0}, {r, r}}, kH);
  const GreedyTrace tr = run_oga(Element({1.0, 1.0}, kH), d, 3);
  EXPECT_EQ(tr.records[0].selection.atom_index, 2U);
  EXPECT_NEAR(tr.records[0].residual_norm, 0.0, 1e-15);
  EXPECT_FALSE(tr.records[1].active);
}

TEST(Hilbert, LpTwoIsAcceptedAsInnerProductSpace) {
  const SpaceSpec l2 = SpaceSpec::lq(2.0);
  const GreedyTrace tr =
      run_wga(Element({3.0, 4.0}, l2), Dictionary::standard_basis(2, l2), 2, 1.0, 1.0);
  EXPECT_TRUE(tr.residual.is_zero());
}

class HilbertProperties : public ::testing::TestWithParam<SelectionMode::Kind> {};

// Invariants of weak runs on instances with exactly known A1 norm.
TEST_P(HilbertProperties, WeakRunInvariants) {
  std::mt19937_64 rng(23 + static_cast<int>(GetParam()));
  for (int i = 0; i < 150; ++i) {
    const bool basis = i % 2 == 0;
    const std::size_t n = 2 + rng() % (basis ? 40 : 6);
    const Dictionary d = basis ? Dictionary::standard_basis(n, kH)
                               : Dictionary::from_atoms(gaussian_atoms(rng, n, n + rng() % n), kH);
    const Element f(testing::random_nonzero(rng, n), kH);
    const double a1 = a1_norm(f, d);
    const double t = i % 3 == 0 ? 1.0 : 0.5;
    const double b = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    const GreedyTrace tr = run_wga(f, d, 80, t, b, {GetParam(), static_cast<std::uint64_t>(i)}, a1);
    ASSERT_LE(energy_identity_check(tr), 1e-9);
    ASSERT_LE(expansion_defect(tr, d), 1e-8);
    for (std::size_t m = 1; m <= tr.records.size(); ++m) {
      const auto& r = tr.records[m - 1];
      ASSERT_LE(tr.residual_norm_at(m), tr.residual_norm_at(m - 1));
      ASSERT_GE(tr.envelope_at(m), tr.envelope_at(m - 1));
      if (!r.active) continue;
      ASSERT_GE(r.y, t * r.selection.sup_value);
      ASSERT_EQ(tr.envelope_at(m), tr.envelope_at(m - 1) + b * r.y);
      const double prev = tr.residual_norm_at(m - 1);
      ASSERT_GE(r.y, t * prev * prev / tr.envelope_at(m - 1) - 1e-9);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, HilbertProperties,
                         ::testing::Values(SelectionMode::Kind::kExact,
                                           SelectionMode::Kind::kAdversarialMinIndex,
                                           SelectionMode::Kind::kSeeded));

TEST(HilbertProperties, OgaOrthogonalityAndMonotonicity) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 20;
    const Dictionary d = Dictionary::from_atoms(gaussian_atoms(rng, n, n + rng() % (2 * n)), kH);
    const Element f(testing::random_nonzero(rng, n), kH);
    const GreedyTrace tr = run_oga(f, d, 2 * n);
    ASSERT_LE(expansion_defect(tr, d), 1e-8);
    std::vector<double> g(n);
    for (std::size_t m = 1; m <= tr.records.size(); ++m) {
      ASSERT_LE(tr.residual_norm_at(m), tr.residual_norm_at(m - 1) + 1e-15);
      const auto& r = tr.records[m - 1];
      if (!r.active || r.degenerate) continue;
      d.atom_coeffs(r.selection.atom_index, g);
      ASSERT_LE(std::fabs(kernels::dot(tr.residual.coeffs(), g)), 1e-8 * norm(f));
    }
  }
}

TEST(HilbertProperties, PgaAndOgaCoincideOnOrthonormalSystems) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 30;
    const Dictionary d = Dictionary::standard_basis(n, kH);
    const Element f(testing::random_nonzero(rng, n), kH);
    const GreedyTrace p = run_pga(f, d, n);
    const GreedyTrace o = run_oga(f, d, n);
    for (std::size_t m = 0; m < n; ++m) {
      ASSERT_EQ(p.records[m].active, o.records[m].active);
      if (!p.records[m].active) continue;
      ASSERT_EQ(p.records[m].selection.atom_index, o.records[m].selection.atom_index);
      ASSERT_NEAR(p.records[m].residual_norm, o.records[m].residual_norm, 1e-10);
    }
  }
}

TEST(HilbertProperties, DeterministicForFixedSeed) {
  std::mt19937_64 rng(26);
  const Element f(testing::random_nonzero(rng, 25), kH);
  const Dictionary d = Dictionary::standard_basis(25, kH);
  const GreedyTrace a = run_wga(f, d, 40, 0.5, 0.5, SelectionMode::seeded(99));
  const GreedyTrace b = run_wga(f, d, 40, 0.5, 0.5, SelectionMode::seeded(99));
  for (std::size_t m = 0; m < 40; ++m) {
    ASSERT_EQ(a.records[m].selection.atom_index, b.records[m].selection.atom_index);
    ASSERT_EQ(a.records[m].residual_norm, b.records[m].residual_norm);
  }
}

}  // namespace
}  // namespace greedy
