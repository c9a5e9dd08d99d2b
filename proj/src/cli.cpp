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

#include "greedy/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "greedy/dictionary.hpp"
#include "greedy/error.hpp"
#include "greedy/experiments.hpp"
#include "greedy/greedy_banach.hpp"
#include "greedy/greedy_hilbert.hpp"
#include "greedy/oracles.hpp"
#include "greedy/trace_io.hpp"

namespace greedy::cli {

namespace {

namespace ex = experiments;

[[noreturn]] void usage(const std::string& flag, const std::string& what) {
  fail(Errc::kInvalidArgument, flag + ": " + what);
}

double parse_double(const std::string& s, const std::string& where) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && std::isspace(static_cast<unsigned char>(*first))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(last[-1]))) --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    usage(where, "cannot parse '" + s + "' as a number");
  }
  return v;
}

// Options given on the command line before resolution.
struct RawOptions {
  std::string command;
  std::string algorithm = "wga";
  std::optional<double> q, t, b;
  std::string format = "json";
  std::string variant;
};

void add_options(CLI::App& sub, CliConfig& cfg, RawOptions& raw) {
  sub.add_option("--algorithm", raw.algorithm, "pga, oga, wga, dga or dga-star");
  sub.add_option("--space", cfg.space, "hilbert or lq");
  sub.add_option("--q", raw.q, "exponent of l_q");
  sub.add_option("--t", raw.t, "weakness parameter in (0, 1]");
  sub.add_option("--b", raw.b, "shrinkage parameter");
  sub.add_option("--gamma", cfg.gamma, "majorant constant gamma");
  sub.add_option("--q-majorant", cfg.q_majorant, "majorant power in (1, 2]");
  sub.add_option("--dim", cfg.dim, "dimension");
  sub.add_option("--m", cfg.m, "number of steps or terms");
  sub.add_option("--f", cfg.f, "ones, ones:K, comma list or file");
  sub.add_option("--mode", cfg.mode, "exact, adversarial or seeded");
  sub.add_option("--seed", cfg.seed, "random seed");
  sub.add_option("--dict", cfg.dict, "dictionary JSON file");
  sub.add_option("--a1", cfg.a1, "known A1 norm of f");
  sub.add_option("--out", cfg.out, "output path, - for stdout");
  sub.add_option("--format", raw.format, "json or csv");
  sub.add_option("--threads", cfg.threads, "worker threads for verify");
  sub.add_option("--suite", cfg.suite, "suite name (all)");
  sub.add_option("--experiment", cfg.experiment, "experiment for sweep");
  sub.add_option("--trials", cfg.trials, "random trials for sweep");
  sub.add_option("--quad-points", cfg.quad_points, "quadrature nodes for demo-trig");
  sub.add_flag("--timing", cfg.timing, "include runtimes in JSON output");
}

bool is_dual(Algorithm a) { return a == Algorithm::kDga || a == Algorithm::kDgaStar; }

void validate(CliConfig& cfg, const RawOptions& raw) {
  try {
    cfg.algorithm = algorithm_from_string(raw.algorithm);
  } catch (const Error&) {
    usage("--algorithm", "unknown algorithm '" + raw.algorithm + "'");
  }
  try {
    cfg.format = report_format_from_string(raw.format);
  } catch (const Error&) {
    usage("--format", "expected json or csv, got '" + raw.format + "'");
  }

  if (cfg.space != "hilbert" && cfg.space != "lq") {
    usage("--space", "expected hilbert or lq, got '" + cfg.space + "'");
  }
  if (raw.q) {
    if (cfg.space == "hilbert" && cfg.command != Command::kDemoTrig &&
        cfg.command != Command::kSweep) {
      usage("--q", "conflicts with --space hilbert");
    }
    if (!(*raw.q > 1.0) || !std::isfinite(*raw.q)) usage("--q", "must lie in (1, inf)");
    cfg.q = *raw.q;
  }

  const bool hilbert_alg = !is_dual(cfg.algorithm);
  if (cfg.command == Command::kRun && hilbert_alg && cfg.space == "lq" && cfg.q != 2.0) {
    usage("--space", to_string(cfg.algorithm) + " needs an inner-product space (hilbert or q = 2)");
  }
  const bool plain = cfg.algorithm == Algorithm::kPga || cfg.algorithm == Algorithm::kOga;
  if (cfg.command == Command::kRun && plain) {
    if (raw.t) usage("--t", "conflicts with --algorithm " + to_string(cfg.algorithm));
    if (raw.b) usage("--b", "conflicts with --algorithm " + to_string(cfg.algorithm));
  }

  cfg.t = raw.t.value_or(1.0);
  if (!(cfg.t > 0.0 && cfg.t <= 1.0)) usage("--t", "must lie in (0, 1]");
  cfg.b = raw.b.value_or(is_dual(cfg.algorithm) ? 0.5 : 1.0);
  if (is_dual(cfg.algorithm)) {
    if (!(cfg.b > 0.0 && cfg.b < 1.0)) {
      usage("--b", "dual greedy steps require b in (0, 1)");
    }
  } else if (!(cfg.b > 0.0 && cfg.b <= 1.0)) {
    usage("--b", "must lie in (0, 1]");
  }
  if (cfg.gamma && !(*cfg.gamma > 0.0)) usage("--gamma", "must be positive");
  if (cfg.q_majorant && !(*cfg.q_majorant > 1.0 && *cfg.q_majorant <= 2.0)) {
    usage("--q-majorant", "must lie in (1, 2]");
  }
  if (cfg.q_majorant && !cfg.gamma) usage("--q-majorant", "requires --gamma");
  if (cfg.mode != "exact" && cfg.mode != "adversarial" && cfg.mode != "seeded") {
    usage("--mode", "expected exact, adversarial or seeded, got '" + cfg.mode + "'");
  }
  if (cfg.threads == 0) usage("--threads", "must be at least 1");
  if (cfg.command == Command::kVerify && cfg.suite != "all") {
    usage("--suite", "only 'all' is available");
  }
  if (cfg.command == Command::kSweep && cfg.experiment.empty()) {
    usage("--experiment", "required by sweep");
  }
  if (cfg.a1 && !(*cfg.a1 > 0.0)) usage("--a1", "must be positive");

  if (const char* env = std::getenv("GREEDY_SEED"); env != nullptr && *env != '\0') {
    const std::string s(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      usage("GREEDY_SEED", "cannot parse '" + s + "' as an unsigned integer");
    }
    cfg.seed = v;
  }
}

SpaceSpec make_space(const CliConfig& cfg) {
  if (cfg.space == "hilbert") {
    if (cfg.gamma) usage("--gamma", "applies to --space lq only");
    return SpaceSpec::hilbert();
  }
  if (cfg.gamma) return SpaceSpec::lq(cfg.q, *cfg.gamma, cfg.q_majorant.value_or(std::min(cfg.q, 2.0)));
  return SpaceSpec::lq(cfg.q);
}

Dictionary load_dictionary(const std::string& path, const SpaceSpec& space) {
  std::ifstream in(path);
  require(in.good(), Errc::kIo, "--dict: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    usage("--dict", std::string("invalid JSON: ") + e.what());
  }
  return dictionary_from_json(j, space);
}

struct Problem {
  Element f;
  Dictionary dict;
  std::optional<double> a1;
};

Problem build_problem(const CliConfig& cfg) {
  const SpaceSpec space = make_space(cfg);
  std::optional<Dictionary> dict;
  std::size_t dim = cfg.dim;
  if (!cfg.dict.empty()) {
    dict = load_dictionary(cfg.dict, space);
    if (dim != 0 && dim != dict->dimension()) usage("--dim", "disagrees with the dictionary");
    dim = dict->dimension();
  }
  Element f(parse_vector_spec(cfg.f, dim), space);
  if (!dict) dict = Dictionary::standard_basis(f.size(), space);
  require(f.size() == dict->dimension(), Errc::kDimensionMismatch,
          "--f: length " + std::to_string(f.size()) + " does not match dimension " +
              std::to_string(dict->dimension()));
  std::optional<double> a1 = cfg.a1;
  if (!a1) {
    if (dict->kind() == DictionaryKind::kStandardBasis) {
      a1 = a1_norm_basis(f);
    } else if (space.has_inner_product() && (dict->size() <= 24 || dict->dimension() <= 12)) {
      const double v = a1_norm_small(f, *dict);
      if (std::isfinite(v)) a1 = v;
    }
  }
  return {std::move(f), std::move(*dict), a1};
}

class Output {
 public:
  Output(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}
  void operator()(const std::string& text) const {
    if (cfg_.out == "-") {
      out_ << text;
    } else {
      write_text(cfg_.out, text);
    }
  }

 private:
  const CliConfig& cfg_;
  std::ostream& out_;
};

int cmd_run(const CliConfig& cfg, const Output& emit) {
  const Problem p = build_problem(cfg);
  const SelectionMode mode = selection_mode_from_string(cfg.mode, cfg.seed);
  std::optional<GreedyTrace> tr;
  switch (cfg.algorithm) {
    case Algorithm::kPga: tr = run_pga(p.f, p.dict, cfg.m, p.a1); break;
    case Algorithm::kOga: tr = run_oga(p.f, p.dict, cfg.m, p.a1); break;
    case Algorithm::kWga: tr = run_wga(p.f, p.dict, cfg.m, cfg.t, cfg.b, mode, p.a1); break;
    case Algorithm::kDga:
    case Algorithm::kDgaStar: {
      const DgaVariant v = cfg.algorithm == Algorithm::kDga ? DgaVariant::kRD : DgaVariant::kStar;
      tr = run_dga(p.f, p.dict, cfg.m, DgaParams::for_space(p.f.space(), cfg.t, cfg.b, v), mode,
                   p.a1);
      break;
    }
  }
  if (cfg.format == ReportFormat::kCsv) {
    std::ostringstream os;
    write_trace_csv(os, *tr);
    emit(os.str());
  } else {
    const nlohmann::json j = {{"config", config_to_json(cfg)}, {"trace", trace_to_json(*tr)}};
    emit(j.dump(2) + "\n");
  }
  return 0;
}

std::vector<SelectionMode::Kind> mode_kinds(const std::string& mode) {
  using K = SelectionMode::Kind;
  return {mode == "adversarial" ? K::kAdversarialMinIndex
                                : mode == "seeded" ? K::kSeeded : K::kExact};
}

ex::ExperimentReport sweep_report(const CliConfig& cfg) {
  const std::string& e = cfg.experiment;
  const auto trials = [&](std::size_t def) { return cfg.trials == 0 ? def : cfg.trials; };
  if (e == "construction_I") return ex::construction_I(cfg.b, cfg.m);
  if (e == "construction_II") return ex::construction_II(cfg.b, cfg.m);
  if (e == "wga") {
    ex::WgaSweepConfig c;
    c.t = cfg.t;
    c.b = cfg.b;
    if (cfg.dim != 0) c.max_dim = cfg.dim;
    c.m_max = cfg.m;
    c.trials = trials(c.trials);
    c.modes = mode_kinds(cfg.mode);
    c.family = ex::DictionaryFamily::kStandardBasis;
    c.seed = cfg.seed;
    return ex::wga_upper_sweep(c);
  }
  if (e == "oga") {
    ex::OgaSweepConfig c;
    if (cfg.dim != 0) c.max_dim = cfg.dim;
    c.m_max = cfg.m;
    c.trials = trials(c.trials);
    c.seed = cfg.seed;
    return ex::oga_upper_sweep(c);
  }
  if (e == "dga") {
    ex::DgaSweepConfig c;
    c.q = cfg.q;
    if (cfg.gamma) c.gamma = *cfg.gamma;
    c.t = cfg.t;
    c.b = cfg.b;
    c.variant = cfg.algorithm == Algorithm::kDgaStar ? DgaVariant::kStar : DgaVariant::kRD;
    if (cfg.dim != 0) c.max_dim = cfg.dim;
    c.m_max = cfg.m;
    c.trials = trials(c.trials);
    c.modes = mode_kinds(cfg.mode);
    c.seed = cfg.seed;
    return ex::dga_upper_sweep(c);
  }
  if (e == "hilbert_specialization") return ex::hilbert_specialization(trials(100), cfg.seed);
  if (e == "lq_lower") {
    std::vector<std::size_t> ms(cfg.m);
    for (std::size_t i = 0; i < ms.size(); ++i) ms[i] = i + 1;
    return ex::lq_lower_bound_experiment(cfg.q, ms);
  }
  if (e == "monotone") return ex::monotone_upper_sweep(cfg.q, trials(500), cfg.seed);
  if (e == "hl1") return ex::hl1_property_suite(trials(10000), cfg.seed);
  if (e == "concavity") return ex::concavity_property_suite(trials(10000), cfg.seed);
  if (e == "trig") return ex::trig_demo_experiment({cfg.m}, cfg.q);
  usage("--experiment",
        "unknown experiment '" + e +
            "' (construction_I, construction_II, wga, oga, dga, hilbert_specialization, "
            "lq_lower, monotone, hl1, concavity, trig)");
}

void summarize_failures(std::span<const ex::ExperimentReport> reports, std::ostream& err) {
  for (const auto& r : reports) {
    if (r.pass) continue;
    std::size_t bad = 0;
    const ex::RatioPoint* first = nullptr;
    for (const auto& p : r.points) {
      if (p.pass) continue;
      ++bad;
      if (first == nullptr) first = &p;
    }
    err << "FAIL " << r.id << " " << r.parameters.dump() << "\n";
    if (first != nullptr) {
      err << "  " << bad << " ratio point(s) out of bounds; first at m=" << first->m
          << " alpha=" << format_double(first->alpha) << " empirical="
          << format_double(first->empirical) << " lower=" << format_double(first->lower)
          << " upper=" << format_double(first->upper) << "\n";
    }
    for (const auto& c : r.checks) {
      if (!c.pass) {
        err << "  check " << c.name << " = " << format_double(c.value) << " > "
            << format_double(c.limit) << "\n";
      }
    }
  }
}

int emit_reports(const CliConfig& cfg, const std::vector<ex::ExperimentReport>& reports,
                 const Output& emit, std::ostream& err) {
  if (cfg.format == ReportFormat::kCsv) {
    emit(reports_to_csv(reports));
  } else {
    emit(reports_to_json(reports, config_to_json(cfg), cfg.timing).dump(2) + "\n");
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (!pass) summarize_failures(reports, err);
  return pass ? 0 : 1;
}

int cmd_sigma(const CliConfig& cfg, const Output& emit) {
  const Problem p = build_problem(cfg);
  const SigmaResult s = p.dict.kind() == DictionaryKind::kStandardBasis
                            ? sigma_m_basis(p.f, cfg.m)
                            : sigma_m_hilbert_bruteforce(p.f, p.dict, cfg.m);
  const std::string method =
      s.method == SigmaResult::Method::kSortedTail ? "sorted_tail" : "brute_force";
  if (cfg.format == ReportFormat::kCsv) {
    std::string support;
    for (std::size_t i = 0; i < s.support.size(); ++i) {
      support += (i ? " " : "") + std::to_string(s.support[i]);
    }
    emit("m,sigma,method,support\n" + std::to_string(s.m) + "," + format_double(s.value) + "," +
         method + "," + support + "\n");
  } else {
    const nlohmann::json j = {{"config", config_to_json(cfg)},
                              {"sigma",
                               {{"m", s.m},
                                {"value", s.value},
                                {"method", method},
                                {"support", s.support},
                                {"degenerate_subsets", s.degenerate_subsets}}}};
    emit(j.dump(2) + "\n");
  }
  return 0;
}

int cmd_demo_trig(const CliConfig& cfg, const Output& emit) {
  if (cfg.m < 1 || cfg.m > 6) usage("--m", "demo-trig supports 1 <= m <= 6");
  const std::size_t points =
      cfg.quad_points != 0 ? cfg.quad_points : std::size_t{1} << (2 * cfg.m + 4);
  const TrigDemo d = trig_lacunary_demo(cfg.m, cfg.q, points);
  if (cfg.format == ReportFormat::kCsv) {
    std::ostringstream os;
    os << "m,q,quad_points,lq_norm,l2_norm,lq_norm_normalized,l2_norm_normalized,"
          "l2_sigma_lower,a1,alpha,ratio\n";
    for (std::size_t i = 0; i < d.alphas.size(); ++i) {
      os << d.m << ',' << format_double(d.q) << ',' << d.quad_points << ','
         << format_double(d.lq_norm) << ',' << format_double(d.l2_norm) << ','
         << format_double(d.lq_norm_normalized) << ',' << format_double(d.l2_norm_normalized)
         << ',' << format_double(d.l2_sigma_lower) << ',' << format_double(d.a1) << ','
         << format_double(d.alphas[i]) << ',' << format_double(d.ratios[i]) << '\n';
    }
    emit(os.str());
  } else {
    const nlohmann::json j = {{"config", config_to_json(cfg)},
                              {"demo",
                               {{"m", d.m},
                                {"q", d.q},
                                {"quad_points", d.quad_points},
                                {"lq_norm", d.lq_norm},
                                {"l2_norm", d.l2_norm},
                                {"lq_norm_normalized", d.lq_norm_normalized},
                                {"l2_norm_normalized", d.l2_norm_normalized},
                                {"l2_sigma_lower", d.l2_sigma_lower},
                                {"a1", d.a1},
                                {"alphas", d.alphas},
                                {"ratios", d.ratios}}}};
    emit(j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::kRun: return "run";
    case Command::kSweep: return "sweep";
    case Command::kVerify: return "verify";
    case Command::kSigma: return "sigma";
    case Command::kDemoTrig: return "demo-trig";
  }
  return "unknown";
}

std::vector<double> parse_vector_spec(const std::string& spec, std::size_t dim) {
  if (spec == "ones") {
    if (dim == 0) usage("--f", "'ones' needs --dim");
    return std::vector<double>(dim, 1.0);
  }
  if (spec.rfind("ones:", 0) == 0) {
    std::size_t k = 0;
    const std::string tail = spec.substr(5);
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || k == 0) {
      usage("--f", "cannot parse count in '" + spec + "'");
    }
    const std::size_t n = dim == 0 ? k : dim;
    if (k > n) usage("--f", "ones:" + std::to_string(k) + " exceeds dimension " + std::to_string(n));
    std::vector<double> v(n, 0.0);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), 1.0);
    return v;
  }
  std::vector<double> v;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      v.push_back(parse_double(line, "--f"));
    }
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_double(item, "--f"));
  }
  if (v.empty()) usage("--f", "empty vector");
  if (dim != 0 && v.size() != dim) {
    usage("--f", "length " + std::to_string(v.size()) + " does not match --dim " +
                     std::to_string(dim));
  }
  return v;
}

CliConfig parse_args(int argc, const char* const* argv) {
  CliConfig cfg;
  RawOptions raw;
  CLI::App app{"Greedy expansion rates: traces, bounds and verification suite",
               "greedy-rates"};
  app.require_subcommand(1);
  const std::pair<const char*, Command> commands[] = {{"run", Command::kRun},
                                                      {"sweep", Command::kSweep},
                                                      {"verify", Command::kVerify},
                                                      {"sigma", Command::kSigma},
                                                      {"demo-trig", Command::kDemoTrig}};
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    add_options(*sub, cfg, raw);
    subs.emplace_back(sub, cmd);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    cfg.help = app.help();
    return cfg;
  } catch (const CLI::ParseError& e) {
    fail(Errc::kInvalidArgument, e.what());
  }
  for (const auto& [sub, cmd] : subs) {
    if (sub->parsed()) cfg.command = cmd;
  }
  validate(cfg, raw);
  return cfg;
}

nlohmann::json config_to_json(const CliConfig& cfg) {
  nlohmann::json j = {{"command", to_string(cfg.command)},
                      {"seed", cfg.seed},
                      {"format", cfg.format == ReportFormat::kJson ? "json" : "csv"},
                      {"threads", cfg.threads}};
  switch (cfg.command) {
    case Command::kVerify:
      j["suite"] = cfg.suite;
      break;
    case Command::kSweep:
      j["experiment"] = cfg.experiment;
      j["algorithm"] = to_string(cfg.algorithm);
      j["t"] = cfg.t;
      j["b"] = cfg.b;
      j["q"] = cfg.q;
      j["m"] = cfg.m;
      j["mode"] = cfg.mode;
      if (cfg.trials != 0) j["trials"] = cfg.trials;
      break;
    case Command::kDemoTrig:
      j["m"] = cfg.m;
      j["q"] = cfg.q;
      j["quad_points"] = cfg.quad_points;
      break;
    case Command::kRun:
    case Command::kSigma:
      j["algorithm"] = to_string(cfg.algorithm);
      j["space"] = cfg.space;
      if (cfg.space == "lq") j["q"] = cfg.q;
      j["t"] = cfg.t;
      j["b"] = cfg.b;
      if (cfg.gamma) j["gamma"] = *cfg.gamma;
      if (cfg.q_majorant) j["q_majorant"] = *cfg.q_majorant;
      j["dim"] = cfg.dim;
      j["m"] = cfg.m;
      j["f"] = cfg.f;
      j["mode"] = cfg.mode;
      if (!cfg.dict.empty()) j["dict"] = cfg.dict;
      if (cfg.a1) j["a1"] = *cfg.a1;
      break;
  }
  return j;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!cfg.help.empty()) {
    out << cfg.help;
    return 0;
  }
  const Output emit(cfg, out);
  try {
    switch (cfg.command) {
      case Command::kRun: return cmd_run(cfg, emit);
      case Command::kSweep: return emit_reports(cfg, {sweep_report(cfg)}, emit, err);
      case Command::kVerify:
        return emit_reports(cfg, ex::run_all({cfg.seed, cfg.threads}), emit, err);
      case Command::kSigma: return cmd_sigma(cfg, emit);
      case Command::kDemoTrig: return cmd_demo_trig(cfg, emit);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace greedy::cli
