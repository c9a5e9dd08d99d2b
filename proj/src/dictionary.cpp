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

#include "greedy/dictionary.hpp"

#include <cmath>
#include <limits>

#include "greedy/error.hpp"
#include "greedy/kernels.hpp"
#include "greedy/simplex.hpp"

namespace greedy {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kDistinctTol = 1e-12;

bool coincide_up_to_sign(std::span<const double> a, std::span<const double> b) {
  double dplus = 0.0;
  double dminus = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dplus = std::max(dplus, std::fabs(a[i] - b[i]));
    dminus = std::max(dminus, std::fabs(a[i] + b[i]));
  }
  return dplus <= kDistinctTol || dminus <= kDistinctTol;
}

}  // namespace

std::string to_string(DictionaryKind kind) {
  return kind == DictionaryKind::kStandardBasis ? "standard_basis" : "finite_atoms";
}

Dictionary Dictionary::standard_basis(std::size_t n, SpaceSpec space) {
  require(n >= 1, Errc::kEmptyDictionary, "standard basis needs dimension >= 1");
  return Dictionary(DictionaryKind::kStandardBasis, n, n, {}, space);
}

Dictionary Dictionary::from_atoms(const std::vector<std::vector<double>>& atoms,
                                  SpaceSpec space) {
  require(!atoms.empty(), Errc::kEmptyDictionary, "dictionary has no atoms");
  const std::size_t dim = atoms.front().size();
  require(dim >= 1, Errc::kInvalidArgument, "atoms must have dimension >= 1");
  std::vector<double> flat;
  flat.reserve(atoms.size() * dim);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const auto& a = atoms[k];
    require(a.size() == dim, Errc::kDimensionMismatch, "atoms differ in dimension");
    for (double v : a) require(std::isfinite(v), Errc::kInvalidArgument, "non-finite atom entry");
    const double nrm = norm(a, space);
    require(std::fabs(nrm - 1.0) <= kUnitTol, Errc::kNotUnit,
            "atom " + std::to_string(k) + " has norm " + std::to_string(nrm));
    for (double v : a) flat.push_back(v / nrm);
  }
  const std::size_t count = atoms.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      std::span<const double> gi(flat.data() + i * dim, dim);
      std::span<const double> gj(flat.data() + j * dim, dim);
      require(!coincide_up_to_sign(gi, gj), Errc::kInvalidArgument,
              "atoms " + std::to_string(i) + " and " + std::to_string(j) +
                  " coincide up to sign");
    }
  }
  return Dictionary(DictionaryKind::kFiniteAtoms, dim, count, std::move(flat), space);
}

Element Dictionary::atom(std::size_t i) const {
  std::vector<double> c(dim_);
  atom_coeffs(i, c);
  return Element(std::move(c), space_);
}

void Dictionary::atom_coeffs(std::size_t i, std::span<double> out) const {
  require(i < count_, Errc::kInvalidArgument, "atom index out of range");
  if (kind_ == DictionaryKind::kStandardBasis) {
    std::fill(out.begin(), out.end(), 0.0);
    out[i] = 1.0;
    return;
  }
  std::copy_n(atoms_.data() + i * dim_, dim_, out.begin());
}

void Dictionary::scores(std::span<const double> v, std::span<double> out) const {
  require(v.size() == dim_, Errc::kDimensionMismatch, "score vector dimension mismatch");
  if (kind_ == DictionaryKind::kStandardBasis) {
    std::copy(v.begin(), v.end(), out.begin());
    return;
  }
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < count_; ++i) {
    out[i] = k.dot(atoms_.data() + i * dim_, v.data(), dim_);
  }
}

void Dictionary::add_atom(double coef, std::size_t i, std::span<double> y) const {
  if (kind_ == DictionaryKind::kStandardBasis) {
    y[i] = y[i] + coef;
    return;
  }
  kernels::active().axpy(coef, atoms_.data() + i * dim_, y.data(), dim_);
}

nlohmann::json to_json(const Dictionary& d) {
  nlohmann::json atoms = nlohmann::json::array();
  if (d.kind() == DictionaryKind::kFiniteAtoms) {
    std::vector<double> buf(d.dimension());
    for (std::size_t i = 0; i < d.size(); ++i) {
      d.atom_coeffs(i, buf);
      atoms.push_back(buf);
    }
  }
  return {{"kind", to_string(d.kind())}, {"dimension", d.dimension()}, {"atoms", atoms}};
}

Dictionary dictionary_from_json(const nlohmann::json& j, SpaceSpec space) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    const auto dim = j.at("dimension").get<std::size_t>();
    if (kind == "standard_basis") return Dictionary::standard_basis(dim, space);
    require(kind == "finite_atoms", Errc::kInvalidArgument, "unknown dictionary kind '" + kind + "'");
    auto atoms = j.at("atoms").get<std::vector<std::vector<double>>>();
    Dictionary d = Dictionary::from_atoms(atoms, space);
    require(d.dimension() == dim, Errc::kDimensionMismatch,
            "atoms do not match the declared dimension");
    return d;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::kInvalidArgument, std::string("malformed dictionary JSON: ") + e.what());
  }
}

std::string to_string(const SelectionMode& mode) {
  switch (mode.kind) {
    case SelectionMode::Kind::kExact: return "exact";
    case SelectionMode::Kind::kAdversarialMinIndex: return "adversarial";
    case SelectionMode::Kind::kSeeded: return "seeded:" + std::to_string(mode.seed);
  }
  return "unknown";
}

SelectionMode selection_mode_from_string(const std::string& s, std::uint64_t seed) {
  if (s == "exact") return SelectionMode::exact();
  if (s == "adversarial") return SelectionMode::adversarial();
  if (s == "seeded") return SelectionMode::seeded(seed);
  if (s.rfind("seeded:", 0) == 0) return SelectionMode::seeded(std::stoull(s.substr(7)));
  fail(Errc::kInvalidArgument, "unknown selection mode '" + s + "'");
}

Selection WeakSelector::operator()(std::span<const double> scores, double t) {
  require(!scores.empty(), Errc::kEmptyDictionary, "selection over an empty dictionary");
  require(t > 0.0 && t <= 1.0, Errc::kInvalidArgument, "weakness t must lie in (0, 1]");
  const auto& k = kernels::active();
  const std::size_t n = scores.size();

  Selection sel;
  switch (mode_.kind) {
    case SelectionMode::Kind::kExact: {
      sel.atom_index = k.argmax_abs(scores.data(), n);
      sel.sup_value = std::fabs(scores[sel.atom_index]);
      break;
    }
    case SelectionMode::Kind::kAdversarialMinIndex: {
      sel.sup_value = k.max_abs(scores.data(), n);
      sel.atom_index = k.first_abs_at_least(scores.data(), n, t * sel.sup_value);
      break;
    }
    case SelectionMode::Kind::kSeeded: {
      sel.sup_value = k.max_abs(scores.data(), n);
      const double thr = t * sel.sup_value;
      // Oriented candidates: +g_i qualifies when s_i >= thr, -g_i when
      // -s_i >= thr. With sup = 0 both orientations of every atom qualify.
      std::size_t count = 0;
      for (double s : scores) count += (s >= thr) + (-s >= thr);
      std::uniform_int_distribution<std::size_t> pick(0, count - 1);
      std::size_t target = pick(rng_);
      for (std::size_t i = 0; i < n; ++i) {
        if (scores[i] >= thr) {
          if (target == 0) {
            sel.atom_index = i;
            sel.orientation = 1;
            sel.value = scores[i];
            return sel;
          }
          --target;
        }
        if (-scores[i] >= thr) {
          if (target == 0) {
            sel.atom_index = i;
            sel.orientation = -1;
            sel.value = -scores[i];
            return sel;
          }
          --target;
        }
      }
      break;
    }
  }
  const double s = scores[sel.atom_index];
  sel.orientation = s < 0.0 ? -1 : 1;
  sel.value = std::fabs(s);
  return sel;
}

Selection select_weak(std::span<const double> scores, const Dictionary& d, double t,
                      SelectionMode mode) {
  require(scores.size() == d.size(), Errc::kDimensionMismatch,
          "one score per canonical atom expected");
  WeakSelector sel(mode);
  return sel(scores, t);
}

double r_D(const Element& f, const Dictionary& d) {
  require(f.size() == d.dimension(), Errc::kDimensionMismatch, "r_D: dimension mismatch");
  std::vector<double> F(f.size());
  norming_functional(f.coeffs(), f.space(), F);
  std::vector<double> s(d.size());
  d.scores(F, s);
  return kernels::max_abs(s);
}

double a1_norm_basis(const Element& f) { return kernels::sum_abs(f.coeffs()); }

double a1_norm_basis(const Element& f, const Dictionary& d) {
  require(d.kind() == DictionaryKind::kStandardBasis, Errc::kWrongDictionaryKind,
          "closed-form A1 norm needs the standard basis");
  require(f.size() == d.dimension(), Errc::kDimensionMismatch, "a1_norm_basis: dimension mismatch");
  return a1_norm_basis(f);
}

double a1_norm_small(const Element& f, const Dictionary& d) {
  require(f.space().has_inner_product() && d.space().has_inner_product(), Errc::kNotHilbert,
          "exact A1 norm is implemented for Hilbert space");
  require(f.size() == d.dimension(), Errc::kDimensionMismatch, "a1_norm_small: dimension mismatch");
  require(d.size() <= 24 || d.dimension() <= 12, Errc::kBudgetExceeded,
          "exact A1 solve needs <= 24 atoms or dimension <= 12");
  if (f.is_zero()) return 0.0;

  // minimize sum(u + v) subject to A (u - v) = f, u, v >= 0.
  const auto n = static_cast<Eigen::Index>(d.dimension());
  const auto N = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXd A(n, 2 * N);
  std::vector<double> g(d.dimension());
  for (Eigen::Index j = 0; j < N; ++j) {
    d.atom_coeffs(static_cast<std::size_t>(j), g);
    for (Eigen::Index i = 0; i < n; ++i) {
      A(i, j) = g[static_cast<std::size_t>(i)];
      A(i, N + j) = -g[static_cast<std::size_t>(i)];
    }
  }
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) b(i) = f[static_cast<std::size_t>(i)];
  const Eigen::VectorXd c = Eigen::VectorXd::Ones(2 * N);
  const lp::Result r = lp::minimize(A, b, c);
  if (r.status != lp::Status::kOptimal) return std::numeric_limits<double>::infinity();
  return r.objective;
}

double a1_norm(const Element& f, const Dictionary& d) {
  if (d.kind() == DictionaryKind::kStandardBasis) return a1_norm_basis(f, d);
  return a1_norm_small(f, d);
}

}  // namespace greedy
