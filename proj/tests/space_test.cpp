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
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "greedy/error.hpp"
#include "test_support.hpp"

namespace greedy {
namespace {

Element unit_random(std::mt19937_64& rng, std::size_t n, const SpaceSpec& s) {
  Element v(testing::random_nonzero(rng, n), s);
  return v.scaled(1.0 / norm(v));
}

TEST(SpaceSpec, MajorantDefaults) {
  EXPECT_EQ(SpaceSpec::hilbert().majorant_gamma(), 0.5);
  EXPECT_EQ(SpaceSpec::hilbert().majorant_power(), 2.0);
  EXPECT_DOUBLE_EQ(SpaceSpec::lq(1.5).majorant_gamma(), 1.0 / 1.5);
  EXPECT_EQ(SpaceSpec::lq(1.5).majorant_power(), 1.5);
  EXPECT_EQ(SpaceSpec::lq(2.0).majorant_gamma(), 0.5);
  EXPECT_EQ(SpaceSpec::lq(2.0).majorant_power(), 2.0);
  EXPECT_EQ(SpaceSpec::lq(3.0).majorant_gamma(), 1.0);
  EXPECT_EQ(SpaceSpec::lq(3.0).majorant_power(), 2.0);
  EXPECT_DOUBLE_EQ(SpaceSpec::lq(1.5).dual_exponent(), 3.0);
}

TEST(SpaceSpec, RejectsOutOfScopeExponents) {
  for (double q : {1.0, 0.5, std::numeric_limits<double>::infinity(), std::numeric_limits<double>::quiet_NaN()}) {
    EXPECT_THROW(SpaceSpec::lq(q), Error) << q;
  }
  EXPECT_THROW(SpaceSpec::lq(1.5, 0.0, 1.5), Error);
  EXPECT_THROW(SpaceSpec::lq(1.5, 1.0, 2.5), Error);
  EXPECT_THROW(SpaceSpec::lq(1.5, 1.0, 1.0), Error);
}

TEST(Element, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Element({}, SpaceSpec::hilbert()), Error);
  EXPECT_THROW(Element({1.0, NAN}, SpaceSpec::hilbert()), Error);
  EXPECT_THROW(Element({INFINITY}, SpaceSpec::lq(1.5)), Error);
}

TEST(Norm, Examples) {
  EXPECT_DOUBLE_EQ(norm(Element({3.0, 4.0}, SpaceSpec::hilbert())), 5.0);
  EXPECT_DOUBLE_EQ(norm(Element({1.0, 1.0, 1.0, 1.0}, SpaceSpec::lq(2.0))), 2.0);
  // 2m unit coordinates in l_q have norm (2m)^{1/q}; m = 3, q = 1.5.
  EXPECT_NEAR(norm(Element::ones(6, 6, SpaceSpec::lq(1.5))), 3.3019272488946263, 1e-12);
}

TEST(Norm, ExtremeMagnitudesDoNotOverflow) {
  const SpaceSpec s = SpaceSpec::lq(3.0);
  EXPECT_NEAR(norm(Element({1e300, 1e300}, s)) / 1e300, std::cbrt(2.0), 1e-12);
  EXPECT_NEAR(norm(Element({1e-300, 1e-300}, s)) / 1e-300, std::cbrt(2.0), 1e-12);
}

TEST(Inner, Examples) {
  const SpaceSpec h = SpaceSpec::hilbert();
  EXPECT_EQ(inner(Element({1.0, 0.0}, h), Element({0.0, 1.0}, h)), 0.0);
  EXPECT_EQ(inner(Element({1.0, 2.0}, h), Element({3.0, 4.0}, h)), 11.0);
  EXPECT_EQ(inner(Element({3.0, 4.0}, h), Element({3.0, 4.0}, h)), 25.0);
}

TEST(Inner, Errors) {
  const SpaceSpec h = SpaceSpec::hilbert();
  EXPECT_THROW(inner(Element({1.0}, h), Element({1.0, 2.0}, h)), Error);
  const SpaceSpec l = SpaceSpec::lq(1.5);
  try {
    inner(Element({1.0}, l), Element({1.0}, l));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotHilbert);
  }
}

TEST(NormingFunctional, Examples) {
  const DualFunctional a = norming_functional(Element({3.0, 4.0}, SpaceSpec::hilbert()));
  EXPECT_DOUBLE_EQ(a[0], 0.6);
  EXPECT_DOUBLE_EQ(a[1], 0.8);

  // Oracle: F_i = sign(f_i) (|f_i| / ||f||)^{q-1} with a direct l_q norm.
  const Element f({1.0, 1.0}, SpaceSpec::lq(1.5));
  const DualFunctional b = norming_functional(f);
  const double nf = testing::plain_norm({1.0, 1.0}, 1.5);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(b[i], std::pow(1.0 / nf, 0.5), 1e-15);
    EXPECT_NEAR(b[i], 0.79370052598409979, 1e-15);
  }
  EXPECT_NEAR(pair(b, f), std::pow(2.0, 2.0 / 3.0), 1e-12);
  EXPECT_NEAR(testing::plain_norm({b[0], b[1]}, 3.0), 1.0, 1e-12);

  const Element g({0.0, -2.0, 0.0}, SpaceSpec::lq(1.7));
  const DualFunctional c = norming_functional(g);
  EXPECT_EQ(c[0], 0.0);
  EXPECT_DOUBLE_EQ(c[1], -1.0);
  EXPECT_EQ(c[2], 0.0);
  EXPECT_NEAR(pair(c, g), 2.0, 1e-12);
  EXPECT_NEAR(dual_norm(c), 1.0, 1e-12);
}

TEST(NormingFunctional, ZeroThrows) {
  try {
    norming_functional(Element::zeros(3, SpaceSpec::lq(1.5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kZeroElement);
  }
}

TEST(Pair, Examples) {
  const SpaceSpec h = SpaceSpec::hilbert();
  EXPECT_DOUBLE_EQ(pair(DualFunctional({0.6, 0.8}, h), Element({1.0, 0.0}, h)), 0.6);
  const Element f({2.0, -1.0, 5.0}, SpaceSpec::lq(3.0));
  EXPECT_NEAR(pair(norming_functional(f), f.scaled(1.0 / norm(f))), 1.0, 1e-12);
  const double c = std::pow(2.0, -1.0 / 3.0);
  EXPECT_EQ(pair(DualFunctional({c, c}, SpaceSpec::lq(1.5)), Element({1.0, -1.0}, SpaceSpec::lq(1.5))),
            0.0);
}

TEST(SmoothnessMajorant, Examples) {
  EXPECT_DOUBLE_EQ(smoothness_majorant(1.0, SpaceSpec::lq(1.5)), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(smoothness_majorant(2.0, SpaceSpec::lq(3.0)), 4.0);
  for (const SpaceSpec& s : testing::test_spaces()) EXPECT_EQ(smoothness_majorant(0.0, s), 0.0);
  EXPECT_THROW(smoothness_majorant(-0.1, SpaceSpec::hilbert()), Error);
}

TEST(EmpiricalModulus, Examples) {
  const SpaceSpec h = SpaceSpec::hilbert();
  const Element e1({1.0, 0.0}, h);
  const Element e2({0.0, 1.0}, h);
  for (double u : {0.0, 0.3, 1.0}) EXPECT_NEAR(empirical_modulus(e1, e1, u), 0.0, 1e-15);
  EXPECT_NEAR(empirical_modulus(e1, e2, 1.0), std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_LE(empirical_modulus(e1, e2, 1.0), 0.5);
  EXPECT_EQ(empirical_modulus(e1, e2, 0.0), 0.0);
  try {
    empirical_modulus(Element({2.0, 0.0}, h), e2, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotUnit);
  }
}

// Property: F_f(f) = ||f|| and ||F_f|| = 1 for random nonzero f.
TEST(SpaceProperties, NormingFunctionalIdentities) {
  std::mt19937_64 rng(11);
  for (const SpaceSpec& s : testing::test_spaces()) {
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 1 + rng() % 40;
      const Element f(testing::random_nonzero(rng, n), s);
      const DualFunctional F = norming_functional(f);
      const double nf = norm(f);
      ASSERT_NEAR(pair(F, f) / nf, 1.0, 1e-9) << s.describe();
      ASSERT_NEAR(dual_norm(F), 1.0, 1e-9) << s.describe();
    }
  }
}

TEST(SpaceProperties, HoelderBound) {
  std::mt19937_64 rng(12);
  for (const SpaceSpec& s : testing::test_spaces()) {
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 1 + rng() % 20;
      const DualFunctional F = norming_functional(Element(testing::random_nonzero(rng, n), s));
      const Element g(testing::random_vector(rng, n, -5.0, 5.0), s);
      ASSERT_LE(std::fabs(pair(F, g)), norm(g) + 1e-9);
    }
  }
}

TEST(SpaceProperties, MajorantDominatesModulus) {
  std::mt19937_64 rng(13);
  for (const SpaceSpec& s : testing::test_spaces()) {
    for (int i = 0; i < 2500; ++i) {
      const std::size_t n = 1 + rng() % 12;
      const Element x = unit_random(rng, n, s);
      const Element y = unit_random(rng, n, s);
      for (double u : {0.01, 0.1, 0.5, 1.0}) {
        ASSERT_LE(empirical_modulus(x, y, u), smoothness_majorant(u, s) + 1e-9)
            << s.describe() << " u=" << u;
      }
    }
  }
}

TEST(SpaceProperties, NormingFunctionalIsScaleInvariant) {
  std::mt19937_64 rng(14);
  for (const SpaceSpec& s : testing::test_spaces()) {
    for (int i = 0; i < 200; ++i) {
      const Element f(testing::random_nonzero(rng, 1 + rng() % 16), s);
      const double a = std::exp(std::uniform_real_distribution<double>(-5.0, 5.0)(rng));
      const DualFunctional F = norming_functional(f);
      const DualFunctional G = norming_functional(f.scaled(a));
      for (std::size_t k = 0; k < f.size(); ++k) ASSERT_NEAR(F[k], G[k], 1e-12);
    }
  }
}

}  // namespace
}  // namespace greedy
