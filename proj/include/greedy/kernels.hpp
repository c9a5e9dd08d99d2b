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

// Data-parallel inner loops shared by every greedy engine.
//
// Each kernel has a portable scalar reference implementation and, where the
// target supports it, an AVX2 (x86-64) or NEON (AArch64) variant. The active
// table is chosen once at startup from the CPU feature set; setting the
// environment variable GREEDY_KERNELS=scalar pins the reference table.
//
// Contract between variants:
//   - max_abs, argmax_abs, first_abs_at_least and axpy are bit-identical.
//   - dot, sum_sq and sum_abs reassociate the reduction and may differ from
//     the scalar result in the last few ulps.

#include <cstddef>
#include <span>
#include <string_view>

namespace greedy::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

struct Table {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum_sq)(const double* a, std::size_t n);
  double (*sum_abs)(const double* a, std::size_t n);
  double (*max_abs)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // Lowest index attaining max |a_i|; n must be > 0.
  std::size_t (*argmax_abs)(const double* a, std::size_t n);
  // Lowest index with |a_i| >= threshold, or n if none.
  std::size_t (*first_abs_at_least)(const double* a, std::size_t n,
                                    double threshold);
};

const Table& scalar_table();
// nullptr when the variant is not compiled in or the CPU lacks it.
const Table* avx2_table();
const Table* neon_table();

// Table selected for this process.
const Table& active();

// Convenience wrappers over active().
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline double sum_sq(std::span<const double> a) {
  return active().sum_sq(a.data(), a.size());
}
inline double sum_abs(std::span<const double> a) {
  return active().sum_abs(a.data(), a.size());
}
inline double max_abs(std::span<const double> a) {
  return active().max_abs(a.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline std::size_t argmax_abs(std::span<const double> a) {
  return active().argmax_abs(a.data(), a.size());
}
inline std::size_t first_abs_at_least(std::span<const double> a,
                                      double threshold) {
  return active().first_abs_at_least(a.data(), a.size(), threshold);
}

}  // namespace greedy::kernels
