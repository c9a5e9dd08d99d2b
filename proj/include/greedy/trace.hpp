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

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/space.hpp"

namespace greedy {

enum class Algorithm { kPga, kWga, kOga, kDga, kDgaStar };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct IterationRecord {
  std::size_t step = 0;
  // False for the zero records emitted after the residual vanished or an
  // orthogonal run stopped on a degenerate step.
  bool active = true;
  // Orthogonal runs only: the step re-selected an active atom or made the
  // Gram system singular. The run stops here.
  bool degenerate = false;
  Selection selection;
  // Selection score: <f_{m-1}, phi_m> in Hilbert runs, F_{f_{m-1}}(phi_m) in
  // dual runs.
  double y = 0.0;
  // Multiple of phi_m removed from the residual: b * y_m for weak runs, c_m
  // for dual runs, the final projection coefficient for orthogonal runs.
  double coefficient = 0.0;
  double residual_norm = 0.0;
  // B_m; NaN when the run was started without an A1 norm.
  double envelope = kNaN;
  // r_D(f_{m-1}); dual runs only.
  double r_d = kNaN;
};

struct GreedyTrace {
  GreedyTrace(Algorithm alg, const Element& f)
      : algorithm(alg), input(f), input_norm(norm(f)), residual(f) {}

  Algorithm algorithm;
  double t = 1.0;
  double b = 1.0;
  SelectionMode mode;
  Element input;
  double input_norm = 0.0;
  std::optional<double> a1;
  // Dual runs: majorant used by the step-size equation.
  double majorant_gamma = kNaN;
  double majorant_power = kNaN;
  std::vector<IterationRecord> records;
  Element residual;
  bool stopped_degenerate = false;

  // ||f_m||, with m = 0 giving ||f||.
  double residual_norm_at(std::size_t m) const {
    return m == 0 ? input_norm : records.at(m - 1).residual_norm;
  }
  // B_m, with B_0 = ||f||_{A1}.
  double envelope_at(std::size_t m) const {
    if (m == 0) return a1 ? *a1 : kNaN;
    return records.at(m - 1).envelope;
  }
};

// max |f - residual - sum_m coefficient_m phi_m| in the space norm, relative to
// ||f|| (absolute when f = 0).
double expansion_defect(const GreedyTrace& trace, const Dictionary& d);

}  // namespace greedy
