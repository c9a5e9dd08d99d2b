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

// Dual greedy expansions in uniformly smooth l_q spaces.

#include <cstddef>
#include <functional>
#include <optional>

#include "greedy/dictionary.hpp"
#include "greedy/trace.hpp"

namespace greedy {

enum class DgaVariant {
  // Step size balanced against t * r_D(f_{m-1}).
  kRD,
  // Step size balanced against F_{f_{m-1}}(phi_m); weakness only enters the
  // selection.
  kStar,
};

struct DgaParams {
  double t = 1.0;
  double b = 0.5;
  DgaVariant variant = DgaVariant::kRD;
  // Power majorant mu(u) = gamma u^power of the modulus of smoothness.
  double gamma = 0.5;
  double power = 2.0;

  // Majorant taken from the space.
  static DgaParams for_space(const SpaceSpec& space, double t, double b, DgaVariant variant);

  // Throws unless t in (0, 1], b in (0, 1), gamma > 0, power in (1, 2].
  void validate() const;
};

// Unique positive root c of
//   ||f|| mu(c / ||f||) = (t_eff b / 2) c drive,  mu(u) = gamma u^power,
// i.e. c = ||f|| (t_eff b drive / (2 gamma))^{1 / (power - 1)}.
double dga_step_size(double residual_norm, double drive, double t_eff, double b, double gamma,
                     double power);

// Same equation for any majorant with mu(u)/u increasing, solved by
// bisection (200 halvings) on a bracket (0, C] that starts at twice the
// power-law root for (gamma, power) and doubles until it straddles the root.
double dga_step_size_bisect(double residual_norm, double drive, double t_eff, double b,
                            const std::function<double(double)>& mu, double gamma,
                            double power);

// DGA(t, b, mu) or DGA(t, b, mu)*: select phi_m with
// F_{f_{m-1}}(phi_m) >= t r_D(f_{m-1}), subtract c_m phi_m. Records c_m,
// r_D(f_{m-1}) and B_m = B_{m-1} + c_m.
GreedyTrace run_dga(const Element& f, const Dictionary& d, std::size_t m, const DgaParams& params,
                    SelectionMode mode = SelectionMode::exact(),
                    std::optional<double> a1 = std::nullopt);

// Worst value over steps of ||f_m|| - (||f_{m-1}|| - t (1 - b) c_m r_D(f_{m-1})).
// Non-positive means every step decreased the norm at least as fast as
// required. Throws kMissingData for traces without r_D records.
double residual_decrease_check(const GreedyTrace& trace);

}  // namespace greedy
