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

#include "greedy/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "greedy/error.hpp"

namespace greedy {

namespace {

bool is_dual(Algorithm a) { return a == Algorithm::kDga || a == Algorithm::kDgaStar; }

nlohmann::json num(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kPga: return "pga";
    case Algorithm::kWga: return "wga";
    case Algorithm::kOga: return "oga";
    case Algorithm::kDga: return "dga";
    case Algorithm::kDgaStar: return "dga-star";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& s) {
  for (Algorithm a : {Algorithm::kPga, Algorithm::kWga, Algorithm::kOga, Algorithm::kDga,
                      Algorithm::kDgaStar}) {
    if (to_string(a) == s) return a;
  }
  fail(Errc::kInvalidArgument, "unknown algorithm '" + s + "'");
}

double expansion_defect(const GreedyTrace& trace, const Dictionary& d) {
  std::vector<double> rebuilt(trace.residual.coeffs().begin(), trace.residual.coeffs().end());
  for (const auto& rec : trace.records) {
    if (!rec.active || rec.degenerate) continue;
    d.add_atom(rec.coefficient * rec.selection.orientation, rec.selection.atom_index, rebuilt);
  }
  const auto f = trace.input.coeffs();
  for (std::size_t i = 0; i < rebuilt.size(); ++i) rebuilt[i] -= f[i];
  const double diff = norm(rebuilt, trace.input.space());
  return trace.input_norm > 0.0 ? diff / trace.input_norm : diff;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const GreedyTrace& trace) {
  const bool dual = is_dual(trace.algorithm);
  os << "m,atom_index,orientation,y_or_c,residual_norm,B_m";
  if (dual) os << ",r_D";
  os << '\n';
  for (const auto& rec : trace.records) {
    const bool on = rec.active;
    os << rec.step << ',' << (on ? static_cast<long long>(rec.selection.atom_index) : -1LL) << ','
       << (on ? rec.selection.orientation : 0) << ','
       << format_double(dual ? rec.coefficient : rec.y) << ',' << format_double(rec.residual_norm)
       << ',' << format_double(rec.envelope);
    if (dual) os << ',' << format_double(rec.r_d);
    os << '\n';
  }
}

nlohmann::json trace_to_json(const GreedyTrace& trace) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : trace.records) {
    records.push_back({
        {"m", rec.step},
        {"active", rec.active},
        {"degenerate", rec.degenerate},
        {"atom_index", rec.selection.atom_index},
        {"orientation", rec.selection.orientation},
        {"value", rec.selection.value},
        {"sup_value", rec.selection.sup_value},
        {"y", rec.y},
        {"coefficient", rec.coefficient},
        {"residual_norm", rec.residual_norm},
        {"B", num(rec.envelope)},
        {"r_D", num(rec.r_d)},
    });
  }
  nlohmann::json j = {
      {"algorithm", to_string(trace.algorithm)},
      {"t", trace.t},
      {"b", trace.b},
      {"mode", to_string(trace.mode)},
      {"space", trace.input.space().describe()},
      {"input", std::vector<double>(trace.input.coeffs().begin(), trace.input.coeffs().end())},
      {"input_norm", trace.input_norm},
      {"a1", trace.a1 ? nlohmann::json(*trace.a1) : nlohmann::json(nullptr)},
      {"records", records},
      {"residual",
       std::vector<double>(trace.residual.coeffs().begin(), trace.residual.coeffs().end())},
      {"stopped_degenerate", trace.stopped_degenerate},
  };
  if (is_dual(trace.algorithm)) {
    j["majorant_gamma"] = trace.majorant_gamma;
    j["majorant_power"] = trace.majorant_power;
  }
  return j;
}

}  // namespace greedy
