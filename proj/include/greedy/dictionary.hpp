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

// Symmetric dictionaries of unit atoms. Only one canonical representative g
// of each pair {g, -g} is stored; selection works over both orientations.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedy/space.hpp"

namespace greedy {

enum class DictionaryKind { kStandardBasis, kFiniteAtoms };

std::string to_string(DictionaryKind kind);

class Dictionary {
 public:
  // {e_1, ..., e_n}. Atoms are implicit; scoring is a coordinate copy.
  static Dictionary standard_basis(std::size_t n, SpaceSpec space);
  // Explicit atoms. Each must have norm 1 within 1e-9 (it is then rescaled to
  // unit norm exactly) and no two may coincide up to sign.
  static Dictionary from_atoms(const std::vector<std::vector<double>>& atoms,
                               SpaceSpec space);

  DictionaryKind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }
  // Number of canonical atoms.
  std::size_t size() const { return count_; }
  const SpaceSpec& space() const { return space_; }

  Element atom(std::size_t i) const;
  // Coordinates of atom i written into out.
  void atom_coeffs(std::size_t i, std::span<double> out) const;

  // out_i = <g_i, v> in the coordinate pairing: the Hilbert correlation when
  // v is a residual, F(g_i) when v holds the coordinates of a functional F.
  void scores(std::span<const double> v, std::span<double> out) const;

  // y += coef * g_i
  void add_atom(double coef, std::size_t i, std::span<double> y) const;

 private:
  Dictionary(DictionaryKind kind, std::size_t dim, std::size_t count,
             std::vector<double> atoms, SpaceSpec space)
      : kind_(kind), dim_(dim), count_(count), atoms_(std::move(atoms)), space_(space) {}

  DictionaryKind kind_;
  std::size_t dim_;
  std::size_t count_;
  // Row-major count_ x dim_; empty for the standard basis.
  std::vector<double> atoms_;
  SpaceSpec space_;
};

// JSON {kind, dimension, atoms: [[...]]}. The standard basis serializes with
// an empty atom list.
nlohmann::json to_json(const Dictionary& d);
Dictionary dictionary_from_json(const nlohmann::json& j, SpaceSpec space);

struct Selection {
  std::size_t atom_index = 0;
  int orientation = 1;
  // Score of the oriented atom that was taken.
  double value = 0.0;
  // Exact supremum of the score over all +-atoms.
  double sup_value = 0.0;
};

// Which t-qualifying oriented atom a weak step takes.
struct SelectionMode {
  enum class Kind { kExact, kAdversarialMinIndex, kSeeded };

  Kind kind = Kind::kExact;
  std::uint64_t seed = 0;

  static SelectionMode exact() { return {Kind::kExact, 0}; }
  static SelectionMode adversarial() { return {Kind::kAdversarialMinIndex, 0}; }
  static SelectionMode seeded(std::uint64_t seed) { return {Kind::kSeeded, seed}; }

  friend bool operator==(const SelectionMode&, const SelectionMode&) = default;
};

std::string to_string(const SelectionMode& mode);
SelectionMode selection_mode_from_string(const std::string& s, std::uint64_t seed);

// Stateful selector: a seeded mode draws from one stream across the steps of
// a run.
class WeakSelector {
 public:
  explicit WeakSelector(SelectionMode mode) : mode_(mode), rng_(mode.seed) {}

  // scores_i is the score of +g_i; -g_i scores -scores_i. t in (0, 1].
  Selection operator()(std::span<const double> scores, double t);

 private:
  SelectionMode mode_;
  std::mt19937_64 rng_;
};

Selection select_weak(std::span<const double> scores, const Dictionary& d, double t,
                      SelectionMode mode);

// sup over +-atoms of F_f(g). Throws for f = 0.
double r_D(const Element& f, const Dictionary& d);

// ||f||_{l_1}, the A1 norm for the standard basis.
double a1_norm_basis(const Element& f);
// Same, but rejects dictionaries other than the standard basis.
double a1_norm_basis(const Element& f, const Dictionary& d);

// Exact A1(D) norm by equality-constrained l_1 minimization, Hilbert only.
// Budget: at most 24 atoms or dimension at most 12. Returns +infinity when f
// lies outside span(D).
double a1_norm_small(const Element& f, const Dictionary& d);

// Closed form for the standard basis, LP otherwise.
double a1_norm(const Element& f, const Dictionary& d);

}  // namespace greedy
