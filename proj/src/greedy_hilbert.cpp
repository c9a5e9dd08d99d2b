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

#include "greedy/greedy_hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "greedy/error.hpp"
#include "greedy/kernels.hpp"

namespace greedy {

namespace {

constexpr double kGramPivot = 1e-12;

void check_hilbert_inputs(const Element& f, const Dictionary& d) {
  require(f.space().has_inner_product() && d.space().has_inner_product(), Errc::kNotHilbert,
          "Hilbert-space greedy algorithms need an inner-product space");
  require(f.size() == d.dimension(), Errc::kDimensionMismatch,
          "element and dictionary dimensions differ");
}

IterationRecord padding_record(std::size_t step, double residual_norm, double envelope) {
  IterationRecord rec;
  rec.step = step;
  rec.active = false;
  rec.residual_norm = residual_norm;
  rec.envelope = envelope;
  return rec;
}

GreedyTrace weak_core(Algorithm tag, const Element& f, const Dictionary& d, std::size_t m,
                      double t, double b, SelectionMode mode, std::optional<double> a1) {
  check_hilbert_inputs(f, d);
  require(t > 0.0 && t <= 1.0, Errc::kInvalidArgument, "weakness t must lie in (0, 1]");
  require(b > 0.0 && b <= 1.0, Errc::kInvalidArgument, "shrinkage b must lie in (0, 1]");

  GreedyTrace trace(tag, f);
  trace.t = t;
  trace.b = b;
  trace.mode = mode;
  trace.a1 = a1;
  trace.records.reserve(m);

  const double stop = kVanishingResidual * trace.input_norm;
  std::vector<double> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<double> scores(d.size());
  WeakSelector select(mode);
  double res_norm = trace.input_norm;
  double envelope = a1 ? *a1 : kNaN;

  for (std::size_t step = 1; step <= m; ++step) {
    if (res_norm <= stop) {
      trace.records.push_back(padding_record(step, res_norm, envelope));
      continue;
    }
    d.scores(r, scores);
    const Selection sel = select(scores, t);
    const double y = sel.value;
    d.add_atom(-b * y * sel.orientation, sel.atom_index, r);
    res_norm = std::sqrt(kernels::sum_sq(r));
    envelope += b * y;

    IterationRecord rec;
    rec.step = step;
    rec.selection = sel;
    rec.y = y;
    rec.coefficient = b * y;
    rec.residual_norm = res_norm;
    rec.envelope = envelope;
    trace.records.push_back(rec);
  }
  trace.residual = Element(std::move(r), f.space());
  return trace;
}

}  // namespace

GreedyTrace run_wga(const Element& f, const Dictionary& d, std::size_t m, double t, double b,
                    SelectionMode mode, std::optional<double> a1) {
  return weak_core(Algorithm::kWga, f, d, m, t, b, mode, a1);
}

GreedyTrace run_pga(const Element& f, const Dictionary& d, std::size_t m,
                    std::optional<double> a1) {
  return weak_core(Algorithm::kPga, f, d, m, 1.0, 1.0, SelectionMode::exact(), a1);
}

GreedyTrace run_oga(const Element& f, const Dictionary& d, std::size_t m,
                    std::optional<double> a1) {
  check_hilbert_inputs(f, d);

  GreedyTrace trace(Algorithm::kOga, f);
  trace.a1 = a1;
  trace.records.reserve(m);

  const std::size_t n = f.size();
  const auto fvec = f.coeffs();
  const double stop = kVanishingResidual * trace.input_norm;
  const auto& k = kernels::active();

  std::vector<double> r(fvec.begin(), fvec.end());
  std::vector<double> scores(d.size());
  std::vector<std::size_t> active;
  std::vector<std::vector<double>> atoms;  // coordinates of active atoms
  std::vector<std::size_t> record_of;     // active slot -> record index
  Eigen::VectorXd coef;
  WeakSelector select(SelectionMode::exact());
  double res_norm = trace.input_norm;

  for (std::size_t step = 1; step <= m; ++step) {
    if (res_norm <= stop || trace.stopped_degenerate) {
      trace.records.push_back(padding_record(step, res_norm, kNaN));
      continue;
    }
    d.scores(r, scores);
    const Selection sel = select(scores, 1.0);

    IterationRecord rec;
    rec.step = step;
    rec.selection = sel;
    rec.y = sel.value;
    rec.residual_norm = res_norm;

    if (std::find(active.begin(), active.end(), sel.atom_index) != active.end()) {
      rec.degenerate = true;
      trace.stopped_degenerate = true;
      trace.records.push_back(rec);
      continue;
    }

    std::vector<double> g(n);
    d.atom_coeffs(sel.atom_index, g);
    atoms.push_back(std::move(g));
    const auto kk = static_cast<Eigen::Index>(atoms.size());

    Eigen::MatrixXd gram(kk, kk);
    Eigen::VectorXd rhs(kk);
    for (Eigen::Index i = 0; i < kk; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        const double v = k.dot(atoms[i].data(), atoms[j].data(), n);
        gram(i, j) = v;
        gram(j, i) = v;
      }
      rhs(i) = k.dot(atoms[i].data(), fvec.data(), n);
    }
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    const double min_pivot = ldlt.vectorD().cwiseAbs().minCoeff();
    if (ldlt.info() != Eigen::Success || min_pivot < kGramPivot) {
      atoms.pop_back();
      rec.degenerate = true;
      trace.stopped_degenerate = true;
      trace.records.push_back(rec);
      continue;
    }
    active.push_back(sel.atom_index);
    record_of.push_back(trace.records.size());

    auto residual_of = [&](const Eigen::VectorXd& c) {
      std::vector<double> out(fvec.begin(), fvec.end());
      for (Eigen::Index i = 0; i < kk; ++i) k.axpy(-c(i), atoms[i].data(), out.data(), n);
      return out;
    };
    coef = ldlt.solve(rhs);
    r = residual_of(coef);
    // One step of iterative refinement keeps the residual orthogonal to the
    // active atoms when the Gram matrix is mildly ill-conditioned.
    Eigen::VectorXd corr(kk);
    for (Eigen::Index i = 0; i < kk; ++i) corr(i) = k.dot(atoms[i].data(), r.data(), n);
    coef += ldlt.solve(corr);
    r = residual_of(coef);

    res_norm = std::sqrt(k.sum_sq(r.data(), n));
    rec.residual_norm = res_norm;
    trace.records.push_back(rec);
  }

  // Coefficients refer to the oriented atoms phi_m = orientation * g.
  for (std::size_t i = 0; i < record_of.size(); ++i) {
    auto& rec = trace.records[record_of[i]];
    rec.coefficient = coef(static_cast<Eigen::Index>(i)) * rec.selection.orientation;
  }
  trace.residual = Element(std::move(r), f.space());
  return trace;
}

double energy_identity_check(const GreedyTrace& trace) {
  require(trace.algorithm == Algorithm::kWga || trace.algorithm == Algorithm::kPga,
          Errc::kInvalidArgument, "energy identity applies to weak and pure greedy traces only");
  const double shrink = trace.b * (2.0 - trace.b);
  double worst = 0.0;
  for (std::size_t m = 1; m <= trace.records.size(); ++m) {
    const auto& rec = trace.records[m - 1];
    if (!rec.active) continue;
    const double prev = trace.residual_norm_at(m - 1);
    const double a_prev = prev * prev;
    const double a_cur = rec.residual_norm * rec.residual_norm;
    const double defect = std::fabs(a_cur - (a_prev - shrink * rec.y * rec.y)) /
                          std::max(a_prev, std::numeric_limits<double>::min());
    worst = std::max(worst, defect);
  }
  return worst;
}

}  // namespace greedy
