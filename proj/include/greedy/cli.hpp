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

// Command-line front end: argument parsing and command dispatch.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedy/report_io.hpp"
#include "greedy/trace.hpp"

namespace greedy::cli {

enum class Command { kRun, kSweep, kVerify, kSigma, kDemoTrig };

std::string to_string(Command c);

struct CliConfig {
  Command command = Command::kRun;
  Algorithm algorithm = Algorithm::kWga;
  // "hilbert" or "lq".
  std::string space = "hilbert";
  double q = 2.0;
  // Resolved per algorithm when left unset.
  double t = 1.0;
  double b = 1.0;
  std::optional<double> gamma;
  std::optional<double> q_majorant;
  // 0 means inferred from --f or --dict.
  std::size_t dim = 0;
  std::size_t m = 10;
  std::string f = "ones";
  std::string mode = "exact";
  std::uint64_t seed = 42;
  std::string dict;
  std::optional<double> a1;
  std::string out = "-";
  ReportFormat format = ReportFormat::kJson;
  std::size_t threads = 1;
  std::string suite = "all";
  std::string experiment;
  // 0 selects the experiment's default.
  std::size_t trials = 0;
  std::size_t quad_points = 0;
  bool timing = false;
  // Set instead of a command when --help was requested.
  std::string help;
};

// Parses and validates. Usage errors throw Error(kInvalidArgument) naming
// the offending flag. GREEDY_SEED, when set, overrides --seed.
CliConfig parse_args(int argc, const char* const* argv);

// Resolved configuration as embedded in every JSON output.
nlohmann::json config_to_json(const CliConfig& cfg);

// f as given by --f: "ones", "ones:K", a comma list, or a file with one value
// per line. dim 0 lets the input decide the length.
std::vector<double> parse_vector_spec(const std::string& spec, std::size_t dim);

// Runs the command. Returns 0 when every asserted inequality passes, 1 when
// some fail (summary on err), 2 on usage or runtime errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace greedy::cli
