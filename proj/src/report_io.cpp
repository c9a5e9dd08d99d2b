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

#include "greedy/report_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "greedy/error.hpp"
#include "greedy/trace_io.hpp"

namespace greedy {

namespace {

using experiments::Check;
using experiments::ExperimentReport;
using experiments::RatioPoint;

nlohmann::json number_or_null(double v) {
  return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v);
}

double number_or_nan(const nlohmann::json& j) {
  return j.is_null() ? kNaN : j.get<double>();
}

}  // namespace

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  fail(Errc::kInvalidArgument, "unknown format '" + s + "' (expected json or csv)");
}

nlohmann::json report_to_json(const ExperimentReport& r, bool with_runtime) {
  nlohmann::json points = nlohmann::json::array();
  for (const RatioPoint& p : r.points) {
    points.push_back({{"m", p.m},
                      {"alpha", p.alpha},
                      {"empirical", p.empirical},
                      {"lower", number_or_null(p.lower)},
                      {"upper", number_or_null(p.upper)},
                      {"pass", p.pass}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name}, {"value", c.value}, {"limit", c.limit}, {"pass", c.pass}});
  }
  nlohmann::json j = {{"id", r.id},
                      {"parameters", r.parameters},
                      {"points", points},
                      {"checks", checks},
                      {"pass", r.pass}};
  if (with_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

ExperimentReport report_from_json(const nlohmann::json& j) {
  try {
    ExperimentReport r;
    r.id = j.at("id").get<std::string>();
    r.parameters = j.at("parameters");
    for (const auto& p : j.at("points")) {
      RatioPoint pt;
      pt.m = p.at("m").get<std::size_t>();
      pt.alpha = p.at("alpha").get<double>();
      pt.empirical = p.at("empirical").get<double>();
      pt.lower = number_or_nan(p.at("lower"));
      pt.upper = number_or_nan(p.at("upper"));
      pt.pass = p.at("pass").get<bool>();
      r.points.push_back(pt);
    }
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("value").get<double>(),
                          c.at("limit").get<double>(), c.at("pass").get<bool>()});
    }
    r.pass = j.at("pass").get<bool>();
    if (j.contains("runtime_seconds")) r.runtime_seconds = j["runtime_seconds"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::kMissingData, std::string("malformed report: ") + e.what());
  }
}

std::string reports_to_csv(std::span<const ExperimentReport> reports) {
  std::ostringstream os;
  os << kReportCsvHeader << '\n';
  for (const ExperimentReport& r : reports) {
    for (const RatioPoint& p : r.points) {
      os << r.id << ',' << p.m << ',' << format_double(p.alpha) << ','
         << format_double(p.empirical) << ',' << format_double(p.lower) << ','
         << format_double(p.upper) << ',' << (p.pass ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

nlohmann::json reports_to_json(std::span<const ExperimentReport> reports,
                               const nlohmann::json& config, bool with_runtime) {
  nlohmann::json list = nlohmann::json::array();
  bool pass = true;
  for (const ExperimentReport& r : reports) {
    list.push_back(report_to_json(r, with_runtime));
    pass = pass && r.pass;
  }
  return {{"config", config}, {"pass", pass}, {"reports", list}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), Errc::kIo, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  require(!out.fail(), Errc::kIo, "failed writing '" + path + "'");
}

void emit_report(const ExperimentReport& r, ReportFormat format, const std::string& path,
                 const nlohmann::json& config) {
  const std::span<const ExperimentReport> one(&r, 1);
  if (format == ReportFormat::kCsv) {
    write_text(path, reports_to_csv(one));
  } else {
    write_text(path, reports_to_json(one, config).dump(2) + "\n");
  }
}

}  // namespace greedy
