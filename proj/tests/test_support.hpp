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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "greedy/space.hpp"

namespace greedy::testing {

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

inline std::vector<double> random_nonzero(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v = random_vector(rng, n);
  if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) v[0] = 1.0;
  return v;
}

// Independent l_q norm without scaling tricks.
inline double plain_norm(const std::vector<double>& v, double q) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::fabs(x), q);
  return std::pow(s, 1.0 / q);
}

inline std::vector<SpaceSpec> test_spaces() {
  return {SpaceSpec::hilbert(), SpaceSpec::lq(1.25), SpaceSpec::lq(1.5), SpaceSpec::lq(2.0),
          SpaceSpec::lq(3.0),   SpaceSpec::lq(4.0)};
}

}  // namespace greedy::testing
