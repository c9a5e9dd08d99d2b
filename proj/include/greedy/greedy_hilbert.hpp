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

// Pure, weak and orthogonal greedy expansions in Hilbert space.

#include <cstddef>
#include <optional>

#include "greedy/dictionary.hpp"
#include "greedy/trace.hpp"

namespace greedy {

// Runs below this fraction of ||f|| are treated as converged.
inline constexpr double kVanishingResidual = 1e-15;

// Weak greedy algorithm with shrinkage b:
//   phi_m with <f_{m-1}, phi_m> >= t sup_g <f_{m-1}, g>,
//   f_m = f_{m-1} - b <f_{m-1}, phi_m> phi_m.
// a1, when given, seeds the envelope B_0 = ||f||_{A1}; B_m = B_{m-1} + b y_m.
// The trace always has m records; steps after the residual vanishes are
// inactive zero records.
GreedyTrace run_wga(const Element& f, const Dictionary& d, std::size_t m, double t,
                    double b, SelectionMode mode = SelectionMode::exact(),
                    std::optional<double> a1 = std::nullopt);

// t = 1, b = 1, exact selection.
GreedyTrace run_pga(const Element& f, const Dictionary& d, std::size_t m,
                    std::optional<double> a1 = std::nullopt);

// Orthogonal greedy algorithm: exact selection against the current residual,
// then f_m = f - P_{span(phi_1..phi_m)} f.
GreedyTrace run_oga(const Element& f, const Dictionary& d, std::size_t m,
                    std::optional<double> a1 = std::nullopt);

// max_m |a_m - (a_{m-1} - b (2 - b) y_m^2)| / max(a_{m-1}, eps) with
// a_m = ||f_m||^2. Weak and pure traces only.
double energy_identity_check(const GreedyTrace& trace);

}  // namespace greedy
