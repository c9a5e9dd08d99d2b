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

#include "greedy/greedy_banach.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "greedy/error.hpp"
#include "greedy/greedy_hilbert.hpp"
#include "greedy/kernels.hpp"

namespace greedy {

DgaParams DgaParams::for_space(const SpaceSpec& space, double t, double b, DgaVariant variant) {
  DgaParams p;
  p.t = t;
  p.b = b;
  p.variant = variant;
  p.gamma = space.majorant_gamma();
  p.power = space.majorant_power();
  return p;
}

void DgaParams::validate() const {
  require(t > 0.0 && t <= 1.0, Errc::kInvalidArgument, "weakness t must lie in (0, 1]");
  require(b > 0.0 && b < 1.0, Errc::kInvalidArgument,
          "dual greedy shrinkage b must lie in (0, 1); b = 1 is not covered");
  require(std::isfinite(gamma) && gamma > 0.0, Errc::kInvalidArgument,
          "majorant gamma must be positive");
  require(power > 1.0 && power <= 2.0, Errc::kInvalidArgument,
          "majorant power must lie in (1, 2]");
}

double dga_step_size(double residual_norm, double drive, double t_eff, double b, double gamma,
                     double power) {
  require(residual_norm > 0.0, Errc::kInvalidArgument, "step size needs a nonzero residual");
  require(drive > 0.0, Errc::kInvalidArgument,
          "step size needs a positive drive (r_D or F(phi) vanished)");
  return residual_norm * std::pow(t_eff * b * drive / (2.0 * gamma), 1.0 / (power - 1.0));
}

double dga_step_size_bisect(double residual_norm, double drive, double t_eff, double b,
                            const std::function<double(double)>& mu, double gamma,
                            double power) {
  require(residual_norm > 0.0, Errc::kInvalidArgument, "step size needs a nonzero residual");
  require(drive > 0.0, Errc::kInvalidArgument, "step size needs a positive drive");
  const double gain = 0.5 * t_eff * b * drive;
  // g < 0 below the root, g > 0 above it.
  auto g = [&](double c) { return residual_norm * mu(c / residual_norm) - gain * c; };
  double hi = 2.0 * dga_step_size(residual_norm, drive, t_eff, b, gamma, power);
  for (int i = 0; i < 1100 && g(hi) <= 0.0; ++i) hi *= 2.0;
  require(g(hi) > 0.0, Errc::kInvalidArgument, "majorant never overtakes the linear gain");
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GreedyTrace run_dga(const Element& f, const Dictionary& d, std::size_t m, const DgaParams& params,
                    SelectionMode mode, std::optional<double> a1) {
  params.validate();
  require(f.size() == d.dimension(), Errc::kDimensionMismatch,
          "element and dictionary dimensions differ");
  require(f.space() == d.space(), Errc::kInvalidArgument,
          "element and dictionary live in different spaces");

  GreedyTrace trace(params.variant == DgaVariant::kStar ? Algorithm::kDgaStar : Algorithm::kDga,
                    f);
  trace.t = params.t;
  trace.b = params.b;
  trace.mode = mode;
  trace.a1 = a1;
  trace.majorant_gamma = params.gamma;
  trace.majorant_power = params.power;
  trace.records.reserve(m);

  const SpaceSpec& space = f.space();
  const double stop = kVanishingResidual * trace.input_norm;
  std::vector<double> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<double> F(r.size());
  std::vector<double> scores(d.size());
  WeakSelector select(mode);
  double res_norm = trace.input_norm;
  double envelope = a1 ? *a1 : kNaN;

  for (std::size_t step = 1; step <= m; ++step) {
    if (res_norm <= stop) {
      IterationRecord pad;
      pad.step = step;
      pad.active = false;
      pad.residual_norm = res_norm;
      pad.envelope = envelope;
      trace.records.push_back(pad);
      continue;
    }
    norming_functional(r, space, F);
    d.scores(F, scores);
    const Selection sel = select(scores, params.t);
    const double rd = sel.sup_value;

    const bool star = params.variant == DgaVariant::kStar;
    const double drive = star ? sel.value : rd;
    const double t_eff = star ? 1.0 : params.t;
    const double c = dga_step_size(res_norm, drive, t_eff, params.b, params.gamma, params.power);

    d.add_atom(-c * sel.orientation, sel.atom_index, r);
    res_norm = norm(r, space);
    envelope += c;

    IterationRecord rec;
    rec.step = step;
    rec.selection = sel;
    rec.y = sel.value;
    rec.coefficient = c;
    rec.residual_norm = res_norm;
    rec.envelope = envelope;
    rec.r_d = rd;
    trace.records.push_back(rec);
  }
  trace.residual = Element(std::move(r), space);
  return trace;
}

double residual_decrease_check(const GreedyTrace& trace) {
  require(trace.algorithm == Algorithm::kDga || trace.algorithm == Algorithm::kDgaStar,
          Errc::kMissingData, "residual decrease check needs a dual greedy trace");
  double worst = -std::numeric_limits<double>::infinity();
  const double slope = trace.t * (1.0 - trace.b);
  for (std::size_t m = 1; m <= trace.records.size(); ++m) {
    const auto& rec = trace.records[m - 1];
    if (!rec.active) continue;
    require(!std::isnan(rec.r_d), Errc::kMissingData, "trace lacks r_D records");
    const double bound = trace.residual_norm_at(m - 1) - slope * rec.coefficient * rec.r_d;
    worst = std::max(worst, rec.residual_norm - bound);
  }
  return std::isinf(worst) ? 0.0 : worst;
}

}  // namespace greedy
