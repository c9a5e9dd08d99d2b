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

#if defined(__aarch64__)
#define GREEDY_HAVE_NEON_BUILD 1
#include <arm_neon.h>

#include <cmath>
#endif

namespace greedy::kernels {

#ifdef GREEDY_HAVE_NEON_BUILD

// NEON is part of the AArch64 baseline, so no runtime probe is needed.
// vmulq/vaddq are kept separate (no vfmaq) so axpy matches the scalar path.

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_sq_neon(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(a + i);
    acc = vaddq_f64(acc, vmulq_f64(x, x));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * a[i];
  return s;
}

double sum_abs_neon(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += std::fabs(a[i]);
  return s;
}

double max_abs_neon(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) {
    const double v = std::fabs(a[i]);
    if (v > m) m = v;
  }
  return m;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

std::size_t first_abs_at_least_neon(const double* a, std::size_t n,
                                    double threshold) {
  const float64x2_t t = vdupq_n_f64(threshold);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t ge = vcgeq_f64(vabsq_f64(vld1q_f64(a + i)), t);
    if (vgetq_lane_u64(ge, 0) != 0) return i;
    if (vgetq_lane_u64(ge, 1) != 0) return i + 1;
  }
  for (; i < n; ++i) {
    if (std::fabs(a[i]) >= threshold) return i;
  }
  return n;
}

std::size_t argmax_abs_neon(const double* a, std::size_t n) {
  const std::size_t idx = first_abs_at_least_neon(a, n, max_abs_neon(a, n));
  return idx < n ? idx : 0;
}

constexpr Table kNeon{
    Isa::kNeon,   dot_neon,  sum_sq_neon,     sum_abs_neon,
    max_abs_neon, axpy_neon, argmax_abs_neon, first_abs_at_least_neon,
};

}  // namespace

const Table* neon_table() { return &kNeon; }

#else

const Table* neon_table() { return nullptr; }

#endif

}  // namespace greedy::kernels
