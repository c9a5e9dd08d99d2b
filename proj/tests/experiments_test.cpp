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

#include "greedy/experiments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "greedy/bounds.hpp"
#include "greedy/error.hpp"
#include "greedy/greedy_hilbert.hpp"
#include "greedy/report_io.hpp"

namespace greedy::experiments {
namespace {

const SpaceSpec kH = SpaceSpec::hilbert();

const RatioPoint& point_at(const ExperimentReport& r, std::size_t m, double alpha) {
  for (const auto& p : r.points) {
    if (p.m == m && std::fabs(p.alpha - alpha) < 1e-15) return p;
  }
  throw std::runtime_error("missing point");
}

const Check* check_named(const ExperimentReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(Ratio, Examples) {
  const Element f({1.0, 2.0}, kH);
  EXPECT_DOUBLE_EQ(ratio(f, f, a1_norm_basis(f), 0.0), 1.0);
  EXPECT_DOUBLE_EQ(ratio_from_norms(std::sqrt(2.0), 2.0, 4.0, 1.0), std::sqrt(2.0) / 4.0);
  // alpha = 1 is the plain normalization by the A1 norm.
  EXPECT_DOUBLE_EQ(ratio_from_norms(0.3, 2.0, 5.0, 1.0), 0.3 / 5.0);
  EXPECT_THROW(ratio(Element::zeros(2, kH), f, 1.0, 0.5), Error);
  EXPECT_THROW(ratio_from_norms(1.0, 2.0, 1.5, 0.5), Error);
  EXPECT_NO_THROW(ratio_from_norms(1.0, 2.0, 2.0 - 1e-10, 0.5));
}

TEST(AlphaGrid, Shapes) {
  const auto g = alpha_grid_upto(1.0 / 3.0);
  ASSERT_EQ(g.size(), 5U);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_DOUBLE_EQ(g.back(), 1.0 / 3.0);
  EXPECT_EQ(quarter_grid(), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
}

TEST(ConstructionI, HandSimulatedCase) {
  const ExperimentReport r = construction_I(0.25, 4);
  EXPECT_EQ(r.parameters["m_prime"].get<std::size_t>(), 3U);
  const RatioPoint& p0 = point_at(r, 4, 0.0);
  EXPECT_NEAR(p0.empirical, 1.2005857945186591 / std::sqrt(3.0), 1e-15);
  EXPECT_DOUBLE_EQ(p0.lower, 0.25);
  const RatioPoint& p1 = point_at(r, 4, 1.0);
  EXPECT_NEAR(p1.empirical, 1.2005857945186591 / 3.0, 1e-15);
  EXPECT_GE(p1.empirical * 3.0, std::sqrt(3.0) / 4.0);
  EXPECT_TRUE(r.pass);
}

TEST(ConstructionI, TinyShrinkDegeneratesToOneCoordinate) {
  const ExperimentReport r = construction_I(1e-3, 5);
  EXPECT_EQ(r.parameters["m_prime"].get<std::size_t>(), 1U);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(point_at(r, 5, 0.0).empirical, std::pow(1.0 - 1e-3, 5), 1e-12);
}

TEST(ConstructionI, FloorGuardOnExactProducts) {
  // 2 * 0.05 * 1000 = 100 exactly in real arithmetic.
  EXPECT_EQ(construction_I(0.05, 1000).parameters["m_prime"].get<std::size_t>(), 101U);
  EXPECT_EQ(construction_I(0.1, 10).parameters["m_prime"].get<std::size_t>(), 3U);
}

TEST(ConstructionI, RejectsLargeShrink) {
  EXPECT_THROW(construction_I(0.3, 4), Error);
  EXPECT_THROW(construction_I(0.0, 4), Error);
}

TEST(ConstructionII, Examples) {
  const ExperimentReport a = construction_II(1.0, 2);
  const RatioPoint& p = point_at(a, 2, 1.0);
  EXPECT_DOUBLE_EQ(p.empirical, std::sqrt(2.0) / 4.0);
  EXPECT_NEAR(p.lower, 0.35355339059327373, 1e-15);
  EXPECT_NEAR(p.empirical, p.lower, 1e-15);
  EXPECT_TRUE(a.pass);

  const ExperimentReport b = construction_II(0.5, 3);
  EXPECT_NEAR(point_at(b, 3, 0.0).empirical, std::sqrt(3.75) / std::sqrt(6.0), 1e-15);
  EXPECT_GE(point_at(b, 3, 0.0).empirical, std::pow(2.0, -0.5));
  EXPECT_TRUE(b.pass);
  EXPECT_THROW(construction_II(0.25, 3), Error);
  EXPECT_THROW(construction_II(1.5, 3), Error);
}

TEST(ConstructionII, BracketedFromBothSides) {
  for (std::size_t m : {1, 4, 16, 64, 256}) {
    const ExperimentReport r = construction_II(1.0, m);
    for (const auto& p : r.points) {
      if (p.alpha > 1.0 / 3.0) continue;
      ASSERT_FALSE(std::isnan(p.upper));
      ASSERT_GE(p.empirical, p.lower - kSlack);
      ASSERT_LE(p.empirical, p.upper + kSlack);
    }
  }
}

TEST(WgaSweep, AveragedOnesExample) {
  for (std::size_t n : {4, 16, 64}) {
    const Element f = Element::ones(n, n, kH).scaled(1.0 / n);
    const GreedyTrace tr = run_wga(f, Dictionary::standard_basis(n, kH), 100, 1.0, 1.0);
    for (std::size_t m = 0; m <= 100; ++m) {
      const double r = ratio_from_norms(tr.residual_norm_at(m), tr.input_norm, 1.0, 1.0 / 3.0);
      ASSERT_LE(r, std::pow(1.0 + m, -1.0 / 6.0) + kSlack);
    }
  }
}

TEST(WgaSweep, PassesAndReportsInformationalPoints) {
  WgaSweepConfig c;
  c.t = 0.5;
  c.b = 0.5;
  c.trials = 20;
  c.m_max = 50;
  c.modes = {SelectionMode::Kind::kExact, SelectionMode::Kind::kSeeded};
  c.family = DictionaryFamily::kMixed;
  const ExperimentReport r = wga_upper_sweep(c);
  EXPECT_TRUE(r.pass);
  // m = 0 ratio is (||f|| / a1)^alpha <= 1.
  for (const auto& p : r.points) {
    if (p.m == 0) {
      ASSERT_LE(p.empirical, 1.0 + kSlack);
    }
    if (p.alpha == 1.0 && p.alpha > bounds::alpha0_hilbert(0.5, 0.5)) {
      ASSERT_TRUE(std::isnan(p.upper));
    }
  }
  ASSERT_NE(check_named(r, "energy_identity_defect"), nullptr);
}

TEST(OgaSweep, SmallConfigPasses) {
  OgaSweepConfig c;
  c.trials = 30;
  const ExperimentReport r = oga_upper_sweep(c);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(check_named(r, "residual_orthogonality")->value, 1e-8);
}

TEST(DgaSweep, RateConstantsAndPass) {
  DgaSweepConfig c;
  c.q = 1.5;
  c.t = 1.0;
  c.b = 0.5;
  c.trials = 10;
  const ExperimentReport r = dga_upper_sweep(c);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.parameters["rate_constant"].get<double>(), 0.0703125, 1e-15);

  DgaSweepConfig h = c;
  h.q = 2.0;
  h.variant = DgaVariant::kStar;
  const ExperimentReport rh = dga_upper_sweep(h);
  EXPECT_TRUE(rh.pass);
  EXPECT_NEAR(rh.parameters["rate_constant"].get<double>(), 0.25, 1e-15);
  EXPECT_NE(check_named(rh, "hilbert_selection_mismatch"), nullptr);
  for (const auto& p : rh.points) {
    if (p.m == 0) {
      ASSERT_LE(p.empirical, 1.0 + kSlack);
    }
  }
  c.q = 2.5;
  EXPECT_THROW(dga_upper_sweep(c), Error);
}

TEST(LqLower, Examples) {
  const ExperimentReport r = lq_lower_bound_experiment(2.0, {1, 8});
  EXPECT_TRUE(r.pass);
  const RatioPoint& p = point_at(r, 8, 1.0);
  EXPECT_NEAR(p.empirical, std::sqrt(8.0) / 16.0, 1e-15);
  EXPECT_NEAR(p.lower, 0.5 / std::sqrt(8.0), 1e-15);
  EXPECT_NEAR(point_at(r, 8, 0.0).empirical, std::pow(2.0, -0.5), 1e-15);
  for (const auto& q : r.points) {
    if (q.m == 1) {
      ASSERT_GE(q.empirical, 0.5);
    }
  }
  EXPECT_THROW(lq_lower_bound_experiment(2.5, {1}), Error);
}

TEST(Suites, SmallRuns) {
  EXPECT_TRUE(monotone_upper_sweep(3.0, 50, 1).pass);
  EXPECT_TRUE(hl1_property_suite(500, 2).pass);
  EXPECT_TRUE(concavity_property_suite(500, 3).pass);
  EXPECT_TRUE(hilbert_specialization(10, 4).pass);
  const ExperimentReport t = trig_demo_experiment({2}, 4.0);
  EXPECT_TRUE(t.pass);
  EXPECT_NEAR(t.parameters["measured"][0]["l2_norm"].get<double>(), std::sqrt(4.0 * std::numbers::pi), 1e-6);
}

TEST(Report, PassReflectsEveryPointAndCheck) {
  ExperimentReport r;
  RatioPoint p;
  p.empirical = 0.5;
  p.upper = 0.4;
  p.evaluate();
  EXPECT_FALSE(p.pass);
  p.upper = 0.5 - 0.5e-9;
  p.evaluate();
  EXPECT_TRUE(p.pass);
  r.points.push_back(p);
  r.add_check("ok", 0.0, 0.0);
  r.finalize();
  EXPECT_TRUE(r.pass);
  r.add_check("bad", 1.0, 0.0);
  r.finalize();
  EXPECT_FALSE(r.pass);
}

TEST(RunAll, DeterministicAcrossThreadCounts) {
  const auto a = run_all({42, 1});
  const auto b = run_all({42, 4});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].pass) << a[i].id;
    EXPECT_EQ(report_to_json(a[i]).dump(), report_to_json(b[i]).dump()) << a[i].id;
  }
  const auto c = run_all({7, 2});
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    differs = differs || report_to_json(a[i]).dump() != report_to_json(c[i]).dump();
  }
  EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace greedy::experiments
