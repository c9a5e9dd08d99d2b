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

#include "greedy/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace greedy {
namespace {

using kernels::Table;

std::vector<const Table*> vector_tables() {
  std::vector<const Table*> out;
  if (const Table* t = kernels::avx2_table()) out.push_back(t);
  if (const Table* t = kernels::neon_table()) out.push_back(t);
  return out;
}

// Lengths straddle every lane and unroll boundary.
std::vector<std::size_t> lengths() {
  std::vector<std::size_t> n;
  for (std::size_t i = 0; i <= 70; ++i) n.push_back(i);
  for (std::size_t i : {127, 128, 129, 255, 256, 1000, 4099}) n.push_back(i);
  return n;
}

TEST(Kernels, ScalarReference) {
  const Table& s = kernels::scalar_table();
  const std::vector<double> a{3.0, -4.0, 0.5, 4.0};
  const std::vector<double> b{1.0, 2.0, -2.0, 0.0};
  EXPECT_EQ(s.dot(a.data(), b.data(), 4), -6.0);
  EXPECT_EQ(s.sum_sq(a.data(), 4), 41.25);
  EXPECT_EQ(s.sum_abs(a.data(), 4), 11.5);
  EXPECT_EQ(s.max_abs(a.data(), 4), 4.0);
  EXPECT_EQ(s.argmax_abs(a.data(), 4), 1U);
  EXPECT_EQ(s.first_abs_at_least(a.data(), 4, 3.5), 1U);
  EXPECT_EQ(s.first_abs_at_least(a.data(), 4, 5.0), 4U);
  std::vector<double> y = b;
  s.axpy(2.0, a.data(), y.data(), 4);
  EXPECT_EQ(y, (std::vector<double>{7.0, -6.0, -1.0, 8.0}));
  EXPECT_EQ(s.max_abs(a.data(), 0), 0.0);
}

TEST(Kernels, ActiveTableIsKnown) {
  const Table& t = kernels::active();
  EXPECT_TRUE(&t == &kernels::scalar_table() || &t == kernels::avx2_table() ||
              &t == kernels::neon_table());
}

TEST(Kernels, VectorVariantsMatchScalar) {
  const auto tables = vector_tables();
  if (tables.empty()) GTEST_SKIP() << "no vector kernels on this machine";
  const Table& s = kernels::scalar_table();
  std::mt19937_64 rng(7);
  for (const Table* v : tables) {
    for (std::size_t n : lengths()) {
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<double> a = testing::random_vector(rng, n, -3.0, 3.0);
        const std::vector<double> b = testing::random_vector(rng, n, -3.0, 3.0);
        // Planted ties exercise the lowest-index rule.
        if (n > 5 && rep % 2 == 1) {
          a[n / 3] = 10.0;
          a[n - 1] = -10.0;
          a[n / 2] = 10.0;
        }
        SCOPED_TRACE(::testing::Message() << kernels::to_string(v->isa) << " n=" << n);
        const double scale = n == 0 ? 1.0 : static_cast<double>(n);
        EXPECT_NEAR(v->dot(a.data(), b.data(), n), s.dot(a.data(), b.data(), n), 1e-14 * 9 * scale);
        EXPECT_NEAR(v->sum_sq(a.data(), n), s.sum_sq(a.data(), n), 1e-14 * 100 * scale);
        EXPECT_NEAR(v->sum_abs(a.data(), n), s.sum_abs(a.data(), n), 1e-14 * 10 * scale);
        EXPECT_EQ(v->max_abs(a.data(), n), s.max_abs(a.data(), n));
        if (n > 0) {
          EXPECT_EQ(v->argmax_abs(a.data(), n), s.argmax_abs(a.data(), n));
        }
        for (double thr : {0.0, 1.0, 2.9, 10.0, 11.0}) {
          EXPECT_EQ(v->first_abs_at_least(a.data(), n, thr), s.first_abs_at_least(a.data(), n, thr));
        }
        std::vector<double> y1 = b;
        std::vector<double> y2 = b;
        v->axpy(-0.37, a.data(), y1.data(), n);
        s.axpy(-0.37, a.data(), y2.data(), n);
        EXPECT_EQ(y1, y2);
      }
    }
  }
}

TEST(Kernels, NanAndSignedZeroHandling) {
  const auto tables = vector_tables();
  if (tables.empty()) GTEST_SKIP() << "no vector kernels on this machine";
  const Table& s = kernels::scalar_table();
  std::vector<double> a(19, -0.0);
  a[11] = -2.0;
  a[17] = 2.0;
  for (const Table* v : tables) {
    EXPECT_EQ(v->argmax_abs(a.data(), a.size()), s.argmax_abs(a.data(), a.size()));
    EXPECT_EQ(v->argmax_abs(a.data(), a.size()), 11U);
    EXPECT_EQ(v->max_abs(a.data(), a.size()), 2.0);
  }
}

}  // namespace
}  // namespace greedy
