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

// CSV and JSON serialization of greedy traces.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "greedy/trace.hpp"

namespace greedy {

// 17 significant digits, round-trip exact. NaN prints as an empty string.
std::string format_double(double v);

// Header m,atom_index,orientation,y_or_c,residual_norm,B_m and, for dual
// runs, r_D. One row per record; inactive records carry atom_index -1.
void write_trace_csv(std::ostream& os, const GreedyTrace& trace);

nlohmann::json trace_to_json(const GreedyTrace& trace);

}  // namespace greedy
