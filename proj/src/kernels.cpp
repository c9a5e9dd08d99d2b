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
#include <cstdlib>
#include <string>

namespace greedy::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_sq_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

double sum_abs_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
  return s;
}

double max_abs_scalar(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::fabs(a[i]);
    if (v > m) m = v;
  }
  return m;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

std::size_t argmax_abs_scalar(const double* a, std::size_t n) {
  std::size_t best = 0;
  double m = std::fabs(a[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const double v = std::fabs(a[i]);
    if (v > m) {
      m = v;
      best = i;
    }
  }
  return best;
}

std::size_t first_abs_at_least_scalar(const double* a, std::size_t n,
                                      double threshold) {
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(a[i]) >= threshold) return i;
  }
  return n;
}

constexpr Table kScalar{
    Isa::kScalar,   dot_scalar,        sum_sq_scalar,
    sum_abs_scalar, max_abs_scalar,    axpy_scalar,
    argmax_abs_scalar, first_abs_at_least_scalar,
};

const Table& select() {
  if (const char* env = std::getenv("GREEDY_KERNELS")) {
    if (std::string(env) == "scalar") return kScalar;
  }
  if (const Table* t = avx2_table()) return *t;
  if (const Table* t = neon_table()) return *t;
  return kScalar;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

const Table& scalar_table() { return kScalar; }

const Table& active() {
  static const Table& table = select();
  return table;
}

}  // namespace greedy::kernels
