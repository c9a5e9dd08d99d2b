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

// JSON and CSV rendering of experiment reports.

#include <span>
#include <string>

#include "json.hpp"

#include "greedy/experiments.hpp"

namespace greedy {

enum class ReportFormat { kJson, kCsv };

ReportFormat report_format_from_string(const std::string& s);

// Keys come out sorted. NaN bounds serialize as null. runtime_seconds is
// left out unless requested so that output is stable across runs.
nlohmann::json report_to_json(const experiments::ExperimentReport& r, bool with_runtime = false);
experiments::ExperimentReport report_from_json(const nlohmann::json& j);

inline constexpr const char* kReportCsvHeader =
    "experiment_id,m,alpha,empirical,lower,upper,pass";

// Header plus one row per RatioPoint, in report order.
std::string reports_to_csv(std::span<const experiments::ExperimentReport> reports);

// {"config": config, "pass": ..., "reports": [...]}.
nlohmann::json reports_to_json(std::span<const experiments::ExperimentReport> reports,
                               const nlohmann::json& config, bool with_runtime = false);

// Writes text to path, or to stdout for "-". Throws Errc::kIo when the file
// cannot be written.
void write_text(const std::string& path, const std::string& text);

void emit_report(const experiments::ExperimentReport& r, ReportFormat format,
                 const std::string& path, const nlohmann::json& config = nlohmann::json::object());

}  // namespace greedy
