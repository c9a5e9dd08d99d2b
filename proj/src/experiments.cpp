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

#include "greedy/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "greedy/bounds.hpp"
#include "greedy/error.hpp"
#include "greedy/greedy_hilbert.hpp"
#include "greedy/kernels.hpp"
#include "greedy/oracles.hpp"
#include "greedy/trace.hpp"

namespace greedy::experiments {

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

SelectionMode make_mode(SelectionMode::Kind kind, std::uint64_t seed) {
  return {kind, kind == SelectionMode::Kind::kSeeded ? seed : 0};
}

struct Instance {
  Dictionary dict;
  Element f;
  double a1;
};

// Sparse f on the standard basis: random support, uniform [-1, 1] entries,
// every other draw rescaled to ||f||_1 = 1.
Instance random_basis_instance(Rng& rng, std::size_t max_dim, const SpaceSpec& space) {
  const std::size_t n = uniform_index(rng, 2, std::max<std::size_t>(2, max_dim));
  const std::size_t k = uniform_index(rng, 1, n);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<double> c(n, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    double v = 0.0;
    while (v == 0.0) v = uniform(rng, -1.0, 1.0);
    c[idx[j]] = v;
  }
  if (rng() & 1U) {
    double s = 0.0;
    for (double v : c) s += std::fabs(v);
    for (double& v : c) v /= s;
  }
  Element f(std::move(c), space);
  const double a1 = a1_norm_basis(f);
  return {Dictionary::standard_basis(n, space), std::move(f), a1};
}

std::vector<std::vector<double>> random_unit_atoms(Rng& rng, std::size_t n, std::size_t count) {
  std::normal_distribution<double> gauss;
  std::vector<std::vector<double>> atoms(count, std::vector<double>(n));
  for (auto& a : atoms) {
    double s = 0.0;
    for (double& v : a) {
      v = gauss(rng);
      s += v * v;
    }
    s = std::sqrt(s);
    for (double& v : a) v /= s;
  }
  return atoms;
}

// Random redundant dictionary in dimension <= 12 with f a combination of a
// few atoms; the A1 norm comes from the exact LP.
Instance random_redundant_instance(Rng& rng, std::size_t max_dim) {
  const SpaceSpec space = SpaceSpec::hilbert();
  const std::size_t n = uniform_index(rng, 2, std::clamp<std::size_t>(max_dim, 2, 12));
  const std::size_t count = uniform_index(rng, n, 2 * n);
  Dictionary d = Dictionary::from_atoms(random_unit_atoms(rng, n, count), space);
  const std::size_t k = uniform_index(rng, 1, std::min<std::size_t>(count, 4));
  std::vector<double> c(n, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    d.add_atom(uniform(rng, -1.0, 1.0), uniform_index(rng, 0, count - 1), c);
  }
  Element f(std::move(c), space);
  const double a1 = a1_norm_small(f, d);
  return {std::move(d), std::move(f), a1};
}

// Max over trials of the empirical ratio, indexed by (m, alpha).
class MaxTable {
 public:
  MaxTable(std::size_t m_count, std::size_t alpha_count)
      : alphas_(alpha_count), values_(m_count * alpha_count, 0.0) {}

  void update(std::size_t m, std::size_t a, double v) {
    double& slot = values_[m * alphas_ + a];
    slot = std::max(slot, v);
  }
  double at(std::size_t m, std::size_t a) const { return values_[m * alphas_ + a]; }

 private:
  std::size_t alphas_;
  std::vector<double> values_;
};

// Tracks the worst value of a quantity that must stay below a limit.
struct Worst {
  double value = -std::numeric_limits<double>::infinity();
  void operator()(double v) { value = std::max(value, v); }
  double get() const { return std::isinf(value) ? 0.0 : value; }
};

nlohmann::json modes_json(const std::vector<SelectionMode::Kind>& modes) {
  nlohmann::json out = nlohmann::json::array();
  for (auto k : modes) {
    switch (k) {
      case SelectionMode::Kind::kExact: out.push_back("exact"); break;
      case SelectionMode::Kind::kAdversarialMinIndex: out.push_back("adversarial"); break;
      case SelectionMode::Kind::kSeeded: out.push_back("seeded"); break;
    }
  }
  return out;
}

std::string family_name(DictionaryFamily f) {
  switch (f) {
    case DictionaryFamily::kStandardBasis: return "standard_basis";
    case DictionaryFamily::kRedundant: return "redundant";
    case DictionaryFamily::kMixed: return "mixed";
  }
  return "unknown";
}

bool use_redundant(DictionaryFamily family, std::size_t trial) {
  return family == DictionaryFamily::kRedundant ||
         (family == DictionaryFamily::kMixed && trial % 2 == 1);
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void RatioPoint::evaluate() {
  const bool lower_ok = std::isnan(lower) || empirical >= lower - kSlack;
  const bool upper_ok = std::isnan(upper) || empirical <= upper + kSlack;
  pass = lower_ok && upper_ok;
}

void ExperimentReport::add_check(std::string name, double value, double limit) {
  checks.push_back({std::move(name), value, limit, value <= limit});
}

void ExperimentReport::finalize() {
  pass = std::all_of(points.begin(), points.end(), [](const RatioPoint& p) { return p.pass; }) &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double ratio_from_norms(double residual_norm, double f_norm, double a1, double alpha) {
  require(f_norm > 0.0, Errc::kZeroElement, "ratio of the zero element");
  require(a1 + kSlack >= f_norm, Errc::kInvalidArgument,
          "A1 norm below the space norm: " + std::to_string(a1) + " < " + std::to_string(f_norm));
  return residual_norm / (std::pow(f_norm, 1.0 - alpha) * std::pow(a1, alpha));
}

double ratio(const Element& f, const Element& residual, double a1, double alpha) {
  return ratio_from_norms(norm(residual), norm(f), a1, alpha);
}

std::vector<double> alpha_grid_upto(double a0) {
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) {
    const double a = 0.1 * k;
    if (a < a0 - 1e-12) grid.push_back(a);
  }
  grid.push_back(a0);
  return grid;
}

std::vector<double> quarter_grid() { return {0.0, 0.25, 0.5, 0.75, 1.0}; }

ExperimentReport construction_I(double b, std::size_t m) {
  require(b > 0.0 && b <= 0.25, Errc::kInvalidArgument, "construction I needs b in (0, 1/4]");
  const auto start = Clock::now();
  // [2bm] as the floor of 2bm; the tiny offset keeps products such as
  // 2 * 0.05 * 1000 from landing just below an integer.
  const auto m_prime =
      static_cast<std::size_t>(std::floor(2.0 * b * static_cast<double>(m) + 1e-9)) + 1;

  ExperimentReport rep;
  rep.id = "construction_I";
  rep.parameters = {{"b", b}, {"m", m}, {"m_prime", m_prime}, {"t", 1.0}};

  const SpaceSpec space = SpaceSpec::hilbert();
  const Element f = Element::ones(m_prime, m_prime, space);
  const Dictionary d = Dictionary::standard_basis(m_prime, space);
  const double a1 = static_cast<double>(m_prime);
  const GreedyTrace trace = run_wga(f, d, m, 1.0, b, SelectionMode::exact(), a1);

  const double floor_coef = 1.0 - (static_cast<double>(m) / static_cast<double>(m_prime) + 1.0) * b;
  const double min_coef = *std::min_element(trace.residual.coeffs().begin(), trace.residual.coeffs().end());
  rep.add_check("coefficient_floor_gap", floor_coef - min_coef, 0.0);
  rep.add_check("coefficient_quarter_gap", 0.25 - min_coef, 0.0);
  rep.add_check("energy_identity_defect", energy_identity_check(trace), kSlack);

  const double a0 = bounds::alpha0_hilbert(1.0, b);
  const double res = trace.residual_norm_at(m);
  for (double alpha : quarter_grid()) {
    RatioPoint p;
    p.m = m;
    p.alpha = alpha;
    p.empirical = ratio_from_norms(res, trace.input_norm, a1, alpha);
    p.lower = std::pow(static_cast<double>(m_prime), -alpha / 2.0) / 4.0;
    if (alpha <= a0) p.upper = bounds::wga_alpha_bound(m, 1.0, b, alpha);
    p.evaluate();
    rep.points.push_back(p);
  }
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport construction_II(double b, std::size_t m) {
  require(b > 0.25 && b <= 1.0, Errc::kInvalidArgument, "construction II needs b in (1/4, 1]");
  require(m >= 1, Errc::kInvalidArgument, "construction II needs m >= 1");
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "construction_II";
  rep.parameters = {{"b", b}, {"m", m}, {"t", 1.0}};

  const SpaceSpec space = SpaceSpec::hilbert();
  const std::size_t n = 2 * m;
  const Element f = Element::ones(n, n, space);
  const Dictionary d = Dictionary::standard_basis(n, space);
  const double a1 = static_cast<double>(n);
  const GreedyTrace trace = run_wga(f, d, m, 1.0, b, SelectionMode::exact(), a1);

  std::vector<std::size_t> hits(n, 0);
  for (const auto& rec : trace.records) {
    if (rec.active) ++hits[rec.selection.atom_index];
  }
  const auto touched = static_cast<double>(std::count(hits.begin(), hits.end(), 1U));
  const auto repeated = static_cast<double>(
      std::count_if(hits.begin(), hits.end(), [](std::size_t h) { return h > 1; }));
  rep.add_check("touched_once_deficit", std::fabs(touched - static_cast<double>(m)), 0.0);
  rep.add_check("touched_twice_count", repeated, 0.0);
  rep.add_check("energy_identity_defect", energy_identity_check(trace), kSlack);

  const double a0 = bounds::alpha0_hilbert(1.0, b);
  const double res = trace.residual_norm_at(m);
  for (double alpha : quarter_grid()) {
    RatioPoint p;
    p.m = m;
    p.alpha = alpha;
    p.empirical = ratio_from_norms(res, trace.input_norm, a1, alpha);
    p.lower = std::pow(2.0, -0.5) * std::pow(static_cast<double>(n), -alpha / 2.0);
    if (alpha <= a0) p.upper = bounds::wga_alpha_bound(m, 1.0, b, alpha);
    p.evaluate();
    rep.points.push_back(p);
    // With b = 1 the touched coordinates vanish and the bound is attained.
    if (b == 1.0 && alpha == 1.0) rep.add_check("alpha1_equality_error", std::fabs(p.empirical - p.lower), 1e-12);
  }
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport wga_upper_sweep(const WgaSweepConfig& cfg) {
  require(!cfg.modes.empty(), Errc::kInvalidArgument, "at least one selection mode");
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "wga_upper_sweep";
  rep.parameters = {{"t", cfg.t},           {"b", cfg.b},
                    {"max_dim", cfg.max_dim}, {"m_max", cfg.m_max},
                    {"trials", cfg.trials}, {"modes", modes_json(cfg.modes)},
                    {"family", family_name(cfg.family)}, {"seed", cfg.seed}};

  const double a0 = bounds::alpha0_hilbert(cfg.t, cfg.b);
  const std::vector<double> alphas = alpha_grid_upto(a0);
  MaxTable table(cfg.m_max + 1, alphas.size() + 1);  // last column: alpha = 1

  Worst energy, weak_gap, envelope_gap, dr_gap, monotone_gap, expansion;
  double runs_with_a1 = 0.0;

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(mix_seed(cfg.seed, trial));
    Instance inst = use_redundant(cfg.family, trial)
                        ? random_redundant_instance(rng, cfg.max_dim)
                        : random_basis_instance(rng, cfg.max_dim, SpaceSpec::hilbert());
    const SelectionMode mode =
        make_mode(cfg.modes[trial % cfg.modes.size()], mix_seed(cfg.seed ^ 0x5eedULL, trial));
    const GreedyTrace tr = run_wga(inst.f, inst.dict, cfg.m_max, cfg.t, cfg.b, mode, inst.a1);
    runs_with_a1 += 1.0;

    energy(energy_identity_check(tr));
    expansion(expansion_defect(tr, inst.dict));
    for (std::size_t m = 1; m <= cfg.m_max; ++m) {
      const auto& rec = tr.records[m - 1];
      monotone_gap(rec.residual_norm - tr.residual_norm_at(m - 1));
      if (!rec.active) continue;
      weak_gap(cfg.t * rec.selection.sup_value - rec.y);
      envelope_gap(std::fabs(rec.envelope - (tr.envelope_at(m - 1) + cfg.b * rec.y)));
      const double prev = tr.residual_norm_at(m - 1);
      dr_gap(cfg.t * prev * prev / tr.envelope_at(m - 1) - rec.y);
    }
    for (std::size_t m = 0; m <= cfg.m_max; ++m) {
      const double res = tr.residual_norm_at(m);
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        table.update(m, a, ratio_from_norms(res, tr.input_norm, inst.a1, alphas[a]));
      }
      table.update(m, alphas.size(), ratio_from_norms(res, tr.input_norm, inst.a1, 1.0));
    }
  }

  for (std::size_t m = 0; m <= cfg.m_max; ++m) {
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      RatioPoint p;
      p.m = m;
      p.alpha = alphas[a];
      p.empirical = table.at(m, a);
      p.upper = bounds::wga_alpha_bound(m, cfg.t, cfg.b, alphas[a]);
      p.evaluate();
      rep.points.push_back(p);
    }
    // Beyond alpha0 nothing is proved; reported only.
    RatioPoint info;
    info.m = m;
    info.alpha = 1.0;
    info.empirical = table.at(m, alphas.size());
    info.evaluate();
    rep.points.push_back(info);
  }
  rep.add_check("energy_identity_defect", energy.get(), kSlack);
  rep.add_check("weak_selection_gap", weak_gap.get(), 0.0);
  rep.add_check("envelope_recursion_defect", envelope_gap.get(), kSlack);
  rep.add_check("demyanov_rubinov_gap", dr_gap.get(), kSlack);
  rep.add_check("residual_increase", monotone_gap.get(), kSlack);
  rep.add_check("expansion_defect", expansion.get(), 1e-8);
  rep.parameters["runs_with_exact_a1"] = runs_with_a1;
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport oga_upper_sweep(const OgaSweepConfig& cfg) {
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "oga_upper_sweep";
  rep.parameters = {{"max_dim", cfg.max_dim}, {"m_max", cfg.m_max}, {"trials", cfg.trials},
                    {"family", family_name(cfg.family)}, {"seed", cfg.seed}};
  const std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
  MaxTable table(cfg.m_max + 1, alphas.size());
  Worst ortho, monotone_gap, expansion, pga_mismatch;
  double exact_a1_runs = 0.0;

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(mix_seed(cfg.seed, trial));
    const SpaceSpec space = SpaceSpec::hilbert();
    const bool redundant = use_redundant(cfg.family, trial);
    const std::size_t n = uniform_index(rng, 2, std::max<std::size_t>(2, cfg.max_dim));
    const Dictionary d = redundant
                             ? Dictionary::from_atoms(
                                   random_unit_atoms(rng, n, uniform_index(rng, n, 2 * n)), space)
                             : Dictionary::standard_basis(n, space);

    // Convex combination of k signed atoms: ||f||_{A1} <= sum of weights = 1.
    const std::size_t k = uniform_index(rng, 1, d.size());
    std::vector<std::size_t> idx(d.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(k);
    double total = 0.0;
    for (double& v : w) total += (v = expo(rng) + 1e-12);
    std::vector<double> c(n, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      const double sign = (rng() & 1U) ? 1.0 : -1.0;
      d.add_atom(sign * w[j] / total, idx[j], c);
    }
    Element f(std::move(c), space);
    double a1 = 1.0;
    if (!redundant) {
      a1 = a1_norm_basis(f);
      exact_a1_runs += 1.0;
    } else if (d.size() <= 24 || n <= 12) {
      a1 = std::min(1.0, a1_norm_small(f, d));
      exact_a1_runs += 1.0;
    }
    if (f.is_zero()) continue;

    const GreedyTrace tr = run_oga(f, d, cfg.m_max, a1);
    expansion(expansion_defect(tr, d));
    std::vector<double> g(n);
    for (const auto& rec : tr.records) {
      if (!rec.active || rec.degenerate) continue;
      d.atom_coeffs(rec.selection.atom_index, g);
      ortho(std::fabs(kernels::dot(tr.residual.coeffs(), g)) / tr.input_norm);
    }
    for (std::size_t m = 1; m <= cfg.m_max; ++m) {
      monotone_gap(tr.residual_norm_at(m) - tr.residual_norm_at(m - 1));
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        table.update(m, a, ratio_from_norms(tr.residual_norm_at(m), tr.input_norm, a1, alphas[a]));
      }
    }
    if (!redundant) {
      // On an orthonormal system the pure and orthogonal algorithms coincide.
      const GreedyTrace pga = run_pga(f, d, cfg.m_max);
      for (std::size_t m = 1; m <= cfg.m_max; ++m) {
        const auto& a = pga.records[m - 1];
        const auto& o = tr.records[m - 1];
        if (a.active != o.active) {
          // One side stopped at the vanishing threshold; norms must still match.
          pga_mismatch(std::fabs(a.residual_norm - o.residual_norm) > 1e-10 ? 1.0 : 0.0);
          continue;
        }
        if (!a.active) continue;
        const bool same = a.selection.atom_index == o.selection.atom_index &&
                          a.selection.orientation == o.selection.orientation &&
                          std::fabs(a.residual_norm - o.residual_norm) <= 1e-10;
        pga_mismatch(same ? 0.0 : 1.0);
      }
    }
  }

  for (std::size_t m = 1; m <= cfg.m_max; ++m) {
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      RatioPoint p;
      p.m = m;
      p.alpha = alphas[a];
      p.empirical = table.at(m, a);
      p.upper = bounds::oga_alpha_bound(m, alphas[a]);
      p.evaluate();
      rep.points.push_back(p);
    }
  }
  rep.add_check("residual_orthogonality", ortho.get(), 1e-8);
  rep.add_check("residual_increase", monotone_gap.get(), kSlack);
  rep.add_check("expansion_defect", expansion.get(), 1e-8);
  rep.add_check("pga_oga_orthonormal_mismatch", pga_mismatch.get(), 0.0);
  rep.parameters["runs_with_exact_a1"] = exact_a1_runs;
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport dga_upper_sweep(const DgaSweepConfig& cfg) {
  require(cfg.q > 1.0 && cfg.q <= 2.0, Errc::kInvalidArgument, "DGA sweep needs q in (1, 2]");
  require(!cfg.modes.empty(), Errc::kInvalidArgument, "at least one selection mode");
  const auto start = Clock::now();
  const SpaceSpec space =
      std::isnan(cfg.gamma) ? SpaceSpec::lq(cfg.q) : SpaceSpec::lq(cfg.q, cfg.gamma, cfg.q);
  const DgaParams params = DgaParams::for_space(space, cfg.t, cfg.b, cfg.variant);
  params.validate();

  ExperimentReport rep;
  rep.id = "dga_upper_sweep";
  rep.parameters = {{"q", cfg.q},
                    {"gamma", params.gamma},
                    {"t", cfg.t},
                    {"b", cfg.b},
                    {"variant", cfg.variant == DgaVariant::kStar ? "star" : "rd"},
                    {"max_dim", cfg.max_dim},
                    {"m_max", cfg.m_max},
                    {"trials", cfg.trials},
                    {"modes", modes_json(cfg.modes)},
                    {"seed", cfg.seed},
                    {"rate_constant", bounds::dga_rate_constant(cfg.b, params.power, params.gamma)}};

  const double a0 = bounds::alpha0_banach(cfg.t, cfg.b);
  const std::vector<double> alphas{a0 / 2.0, a0};
  MaxTable table(cfg.m_max + 1, alphas.size());
  Worst decrease, envelope_a1, rd_gap, lyapunov, step_eq, monotone_gap, expansion;
  Worst hilbert_sel, hilbert_coef;
  const bool cross_check = cfg.q == 2.0 && params.gamma == 0.5 && cfg.t == 1.0 &&
                           cfg.variant == DgaVariant::kStar;
  const double lyap_exp = cfg.t * (1.0 - cfg.b);

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(mix_seed(cfg.seed, trial));
    const Instance inst = random_basis_instance(rng, cfg.max_dim, space);
    const SelectionMode mode =
        make_mode(cfg.modes[trial % cfg.modes.size()], mix_seed(cfg.seed ^ 0x5eedULL, trial));
    const GreedyTrace tr = run_dga(inst.f, inst.dict, cfg.m_max, params, mode, inst.a1);

    decrease(residual_decrease_check(tr));
    expansion(expansion_defect(tr, inst.dict));

    // Rebuild the residual step by step for its exact A1 norm.
    std::vector<double> r(inst.f.coeffs().begin(), inst.f.coeffs().end());
    for (std::size_t m = 1; m <= cfg.m_max; ++m) {
      const auto& rec = tr.records[m - 1];
      const double prev = tr.residual_norm_at(m - 1);
      monotone_gap(rec.residual_norm - prev);
      if (!rec.active) continue;
      inst.dict.add_atom(-rec.coefficient * rec.selection.orientation, rec.selection.atom_index, r);
      envelope_a1(kernels::sum_abs(r) - rec.envelope);
      rd_gap(prev / tr.envelope_at(m - 1) - rec.r_d);
      const double before = prev * std::pow(tr.envelope_at(m - 1), lyap_exp);
      const double after = rec.residual_norm * std::pow(rec.envelope, lyap_exp);
      lyapunov((after - before) / before);
      const bool star = cfg.variant == DgaVariant::kStar;
      const double drive = star ? rec.y : rec.r_d;
      const double t_eff = star ? 1.0 : cfg.t;
      const double lhs =
          prev * params.gamma * std::pow(rec.coefficient / prev, params.power);
      const double rhs = 0.5 * t_eff * cfg.b * rec.coefficient * drive;
      step_eq(std::fabs(lhs - rhs) / std::max(lhs, rhs));
    }
    for (std::size_t m = 0; m <= cfg.m_max; ++m) {
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        table.update(m, a,
                     ratio_from_norms(tr.residual_norm_at(m), tr.input_norm, inst.a1, alphas[a]));
      }
    }
    if (cross_check && mode.kind == SelectionMode::Kind::kExact) {
      const GreedyTrace w = run_wga(inst.f, inst.dict, cfg.m_max, 1.0, cfg.b);
      for (std::size_t m = 1; m <= cfg.m_max; ++m) {
        const auto& a = tr.records[m - 1];
        const auto& o = w.records[m - 1];
        if (!a.active || !o.active) continue;
        const bool same = a.selection.atom_index == o.selection.atom_index &&
                          a.selection.orientation == o.selection.orientation;
        hilbert_sel(same ? 0.0 : 1.0);
        hilbert_coef(std::fabs(a.coefficient - o.coefficient));
      }
    }
  }

  for (std::size_t m = 0; m <= cfg.m_max; ++m) {
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      RatioPoint p;
      p.m = m;
      p.alpha = alphas[a];
      p.empirical = table.at(m, a);
      p.upper = bounds::dga_alpha_bound(m, cfg.t, cfg.b, params.power, params.gamma, alphas[a]);
      p.evaluate();
      rep.points.push_back(p);
    }
  }
  rep.add_check("residual_decrease_violation", decrease.get(), kSlack);
  rep.add_check("envelope_a1_gap", envelope_a1.get(), kSlack);
  rep.add_check("r_D_lower_bound_gap", rd_gap.get(), kSlack);
  rep.add_check("lyapunov_increase", lyapunov.get(), kSlack);
  rep.add_check("step_equation_residual", step_eq.get(), 1e-10);
  rep.add_check("residual_increase", monotone_gap.get(), kSlack);
  rep.add_check("expansion_defect", expansion.get(), 1e-8);
  if (cross_check) {
    rep.add_check("hilbert_selection_mismatch", hilbert_sel.get(), 0.0);
    rep.add_check("hilbert_coefficient_diff", hilbert_coef.get(), 1e-10);
  }
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport hilbert_specialization(std::size_t trials, std::uint64_t seed) {
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "hilbert_specialization";
  rep.parameters = {{"trials", trials}, {"seed", seed}};
  Worst selection_mismatch, coefficient_diff, residual_diff;
  const SpaceSpec space = SpaceSpec::hilbert();

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(mix_seed(seed, trial));
    const std::size_t n = uniform_index(rng, 2, 48);
    // Even trials: standard basis. Odd trials: a random orthonormal basis.
    Dictionary d = Dictionary::standard_basis(n, space);
    if (trial % 2 == 1) {
      Eigen::MatrixXd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      std::normal_distribution<double> gauss;
      for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = gauss(rng);
      const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
      std::vector<std::vector<double>> atoms(n, std::vector<double>(n));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          atoms[j][i] = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
      }
      d = Dictionary::from_atoms(atoms, space);
    }
    std::vector<double> c(n);
    for (double& v : c) v = uniform(rng, -1.0, 1.0);
    const Element f(std::move(c), space);
    const double b = uniform(rng, 0.05, 0.95);
    const std::size_t steps = 100;

    const DgaParams params = DgaParams::for_space(space, 1.0, b, DgaVariant::kStar);
    const GreedyTrace dual = run_dga(f, d, steps, params);
    const GreedyTrace weak = run_wga(f, d, steps, 1.0, b);
    for (std::size_t m = 0; m < steps; ++m) {
      const auto& a = dual.records[m];
      const auto& o = weak.records[m];
      if (!a.active || !o.active) continue;
      const bool same = a.selection.atom_index == o.selection.atom_index &&
                        a.selection.orientation == o.selection.orientation;
      selection_mismatch(same ? 0.0 : 1.0);
      coefficient_diff(std::fabs(a.coefficient - o.coefficient));
      residual_diff(std::fabs(a.residual_norm - o.residual_norm));
    }
  }
  rep.add_check("selection_mismatch", selection_mismatch.get(), 0.0);
  rep.add_check("coefficient_diff", coefficient_diff.get(), 1e-10);
  rep.add_check("residual_norm_diff", residual_diff.get(), 1e-10);
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport lq_lower_bound_experiment(double q, const std::vector<std::size_t>& ms) {
  require(q > 1.0 && q <= 2.0, Errc::kInvalidArgument, "lower-bound experiment needs q in (1, 2]");
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "lq_lower_bound";
  rep.parameters = {{"q", q}, {"m_list", ms}};
  const SpaceSpec space = SpaceSpec::lq(q);
  const double p = space.dual_exponent();
  Worst sigma_err, equality_err;
  for (std::size_t m : ms) {
    require(m >= 1, Errc::kInvalidArgument, "m must be >= 1");
    const Element f = Element::ones(2 * m, 2 * m, space);
    const double sigma = sigma_m_basis(f, m).value;
    const double fn = norm(f);
    const double a1 = a1_norm_basis(f);
    const double md = static_cast<double>(m);
    sigma_err(std::fabs(sigma - std::pow(md, 1.0 / q)) / std::pow(md, 1.0 / q));
    for (double alpha : quarter_grid()) {
      RatioPoint pt;
      pt.m = m;
      pt.alpha = alpha;
      pt.empirical = ratio_from_norms(sigma, fn, a1, alpha);
      pt.lower = 0.5 * std::pow(md, -alpha / p);
      pt.evaluate();
      rep.points.push_back(pt);
      if (alpha == 1.0) equality_err(std::fabs(pt.empirical - pt.lower));
    }
  }
  rep.add_check("sigma_closed_form_rel_error", sigma_err.get(), 1e-12);
  rep.add_check("alpha1_equality_error", equality_err.get(), 1e-12);
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport monotone_upper_sweep(double q, std::size_t trials, std::uint64_t seed) {
  require(q > 2.0, Errc::kInvalidArgument, "monotone sweep needs q > 2");
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "monotone_upper_sweep";
  rep.parameters = {{"q", q}, {"trials", trials}, {"seed", seed}};
  const SpaceSpec space = SpaceSpec::lq(q);
  const double p = space.dual_exponent();
  const std::vector<double> alphas{1.0 / q, 0.5 * (1.0 / q + 1.0), 1.0};
  constexpr std::size_t kMaxLen = 64;
  MaxTable table(kMaxLen + 1, alphas.size());
  std::vector<bool> seen(kMaxLen + 1, false);
  Worst direct_gap;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(mix_seed(seed, trial));
    const std::size_t n = uniform_index(rng, 1, kMaxLen);
    std::vector<double> c(n);
    if (trial % 2 == 0) {
      for (double& v : c) v = uniform(rng, 0.0, 1.0);
      std::sort(c.begin(), c.end(), std::greater<>());
    } else {
      const double s = uniform(rng, 0.0, 2.0);
      const double scale = uniform(rng, 0.1, 10.0);
      for (std::size_t i = 0; i < n; ++i) c[i] = scale * std::pow(static_cast<double>(i + 1), -s);
    }
    if (c[0] == 0.0) c[0] = 1.0;
    const Element f(std::move(c), space);
    const double fn = norm(f);
    const double a1 = a1_norm_basis(f);
    for (std::size_t m = 1; m <= n; ++m) {
      seen[m] = true;
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        const MonotoneBound mb = monotone_coefficient_bound(f, m, alphas[a]);
        direct_gap(mb.sigma - mb.bound);
        table.update(m, a, ratio_from_norms(mb.sigma, fn, a1, alphas[a]));
      }
    }
  }
  for (std::size_t m = 1; m <= kMaxLen; ++m) {
    if (!seen[m]) continue;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      RatioPoint pt;
      pt.m = m;
      pt.alpha = alphas[a];
      pt.empirical = table.at(m, a);
      pt.upper = std::pow(static_cast<double>(m), -alphas[a] / p);
      pt.evaluate();
      rep.points.push_back(pt);
    }
  }
  rep.add_check("sigma_above_bound", direct_gap.get(), kSlack);
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport hl1_property_suite(std::size_t instances, std::uint64_t seed) {
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "hl1_property_suite";
  rep.parameters = {{"instances", instances}, {"seed", seed}};
  Rng rng(seed);
  double hypothesis_failures = 0.0;
  double conclusion_failures = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double c1 = uniform(rng, 1e-3, 5.0);
    const double c2 = uniform(rng, 1e-6, 1.0 / c1);
    const std::size_t len = uniform_index(rng, 1, 200);
    std::vector<double> xs(len);
    xs[0] = c1 * uniform(rng, 0.0, 1.0);
    if (rng() % 4 == 0) xs[0] = c1;
    const bool exact = rng() % 3 == 0;
    for (std::size_t m = 0; m + 1 < len; ++m) {
      const double cap = xs[m] * (1.0 - xs[m] * c2);
      xs[m + 1] = exact ? cap : cap * uniform(rng, 0.0, 1.0);
    }
    const bounds::Hl1Check r = bounds::check_hl1_recursion(xs, c1, c2);
    if (!r.hypothesis) hypothesis_failures += 1.0;
    if (r.hypothesis && !r.conclusion) conclusion_failures += 1.0;
  }
  rep.add_check("generator_hypothesis_failures", hypothesis_failures, 0.0);
  rep.add_check("conclusion_violations", conclusion_failures, 0.0);
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport concavity_property_suite(std::size_t instances, std::uint64_t seed) {
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "concavity_property_suite";
  rep.parameters = {{"instances", instances}, {"seed", seed}};
  Rng rng(seed);
  double violations = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double a = 10.0 * (1.0 - uniform(rng, 0.0, 1.0));  // (0, 10]
    double x = uniform(rng, -10.0, 1.0);
    while (x < -a) x = uniform(rng, -10.0, 1.0);
    if (!bounds::check_concavity_inequality(x, a)) violations += 1.0;
  }
  rep.add_check("violations", violations, 0.0);
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

ExperimentReport trig_demo_experiment(const std::vector<std::size_t>& ms, double q) {
  const auto start = Clock::now();
  ExperimentReport rep;
  rep.id = "trig_lacunary_demo";
  rep.parameters = {{"q", q}, {"m_list", ms}};
  Worst l2_err, ordering_gap, nonfinite;
  nlohmann::json measured = nlohmann::json::array();
  for (std::size_t m : ms) {
    const std::size_t points = std::size_t{1} << (2 * m + 4);
    const TrigDemo demo = trig_lacunary_demo(m, q, points);
    l2_err(std::fabs(demo.l2_norm - std::sqrt(2.0 * static_cast<double>(m) * std::numbers::pi)));
    nonfinite(std::isfinite(demo.lq_norm) ? 0.0 : 1.0);
    ordering_gap(demo.l2_norm_normalized - demo.lq_norm_normalized);
    measured.push_back({{"m", m},
                        {"quad_points", points},
                        {"lq_norm", demo.lq_norm},
                        {"l2_norm", demo.l2_norm},
                        {"lq_norm_normalized", demo.lq_norm_normalized},
                        {"l2_norm_normalized", demo.l2_norm_normalized},
                        {"l2_sigma_lower", demo.l2_sigma_lower},
                        {"a1", demo.a1}});
    // Constants in the lower bound are not specified; ratios are reported.
    for (std::size_t a = 0; a < demo.alphas.size(); ++a) {
      RatioPoint pt;
      pt.m = m;
      pt.alpha = demo.alphas[a];
      pt.empirical = demo.ratios[a];
      pt.evaluate();
      rep.points.push_back(pt);
    }
  }
  rep.parameters["measured"] = measured;
  rep.add_check("l2_quadrature_error", l2_err.get(), 1e-6);
  rep.add_check("lq_nonfinite", nonfinite.get(), 0.0);
  rep.add_check("l2_exceeds_lq_normalized", ordering_gap.get(), kSlack);
  rep.finalize();
  rep.runtime_seconds = elapsed(start);
  return rep;
}

std::vector<ExperimentReport> run_all(const SuiteConfig& cfg) {
  std::vector<std::function<ExperimentReport()>> jobs;
  std::uint64_t k = 0;
  auto seed = [&] { return mix_seed(cfg.seed, k++); };

  for (double b : {0.05, 0.1, 0.25}) {
    for (std::size_t m : {10, 100, 1000}) jobs.emplace_back([=] { return construction_I(b, m); });
  }
  for (double b : {0.3, 0.5, 1.0}) {
    for (std::size_t m : {8, 64, 512}) jobs.emplace_back([=] { return construction_II(b, m); });
  }
  using K = SelectionMode::Kind;
  for (double t : {0.5, 1.0}) {
    for (double b : {0.25, 0.5, 1.0}) {
      WgaSweepConfig c;
      c.t = t;
      c.b = b;
      c.trials = 84;
      c.modes = {K::kExact, K::kAdversarialMinIndex, K::kSeeded};
      c.family = DictionaryFamily::kMixed;
      c.seed = seed();
      jobs.emplace_back([=] { return wga_upper_sweep(c); });
    }
  }
  {
    OgaSweepConfig c;
    c.seed = seed();
    jobs.emplace_back([=] { return oga_upper_sweep(c); });
  }
  for (double q : {1.25, 1.5, 2.0}) {
    for (double t : {0.5, 1.0}) {
      for (double b : {0.25, 0.5}) {
        for (DgaVariant v : {DgaVariant::kRD, DgaVariant::kStar}) {
          DgaSweepConfig c;
          c.q = q;
          c.t = t;
          c.b = b;
          c.variant = v;
          c.trials = 100;
          c.modes = {K::kExact, K::kAdversarialMinIndex, K::kSeeded};
          c.seed = seed();
          jobs.emplace_back([=] { return dga_upper_sweep(c); });
        }
      }
    }
  }
  {
    const std::uint64_t s = seed();
    jobs.emplace_back([=] { return hilbert_specialization(100, s); });
  }
  std::vector<std::size_t> ms(64);
  for (std::size_t i = 0; i < ms.size(); ++i) ms[i] = i + 1;
  for (double q : {1.25, 1.5, 2.0}) {
    jobs.emplace_back([=] { return lq_lower_bound_experiment(q, ms); });
  }
  for (double q : {2.5, 3.0, 4.0}) {
    const std::uint64_t s = seed();
    jobs.emplace_back([=] { return monotone_upper_sweep(q, 500, s); });
  }
  {
    const std::uint64_t s1 = seed();
    const std::uint64_t s2 = seed();
    jobs.emplace_back([=] { return hl1_property_suite(10000, s1); });
    jobs.emplace_back([=] { return concavity_property_suite(10000, s2); });
  }
  for (double q : {3.0, 4.0}) {
    jobs.emplace_back([=] { return trig_demo_experiment({2, 3}, q); });
  }

  std::vector<ExperimentReport> out(jobs.size());
  const std::size_t workers = std::clamp<std::size_t>(cfg.threads, 1, jobs.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i]();
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace greedy::experiments
