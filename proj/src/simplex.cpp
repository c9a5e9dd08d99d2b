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

#include "greedy/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace greedy::lp {

namespace {

constexpr double kPivotEps = 1e-11;

// Tableau with rows 0..m-1 constraints and row m the objective (reduced
// costs), last column the right-hand side.
struct Tableau {
  Eigen::MatrixXd t;
  std::vector<int> basis;
  int rows = 0;
  int cols = 0;  // structural + artificial columns, excluding rhs

  double& rhs(int r) { return t(r, cols); }

  void pivot(int r, int c) {
    t.row(r) /= t(r, c);
    for (int i = 0; i <= rows; ++i) {
      if (i != r && t(i, c) != 0.0) t.row(i) -= t(i, c) * t.row(r);
    }
    basis[r] = c;
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(int allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (t(rows, j) < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows; ++i) {
        if (t(i, enter) > kPivotEps) {
          const double ratio = rhs(i) / t(i, enter);
          if (ratio < best - kPivotEps ||
              (std::fabs(ratio - best) <= kPivotEps && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result minimize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());

  Tableau tab;
  tab.rows = m;
  tab.cols = n + m;
  tab.t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const double s = b(i) < 0.0 ? -1.0 : 1.0;
    tab.t.row(i).head(n) = s * A.row(i);
    tab.t(i, n + i) = 1.0;
    tab.rhs(i) = s * b(i);
    tab.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  for (int i = 0; i < m; ++i) tab.t.row(m) -= tab.t.row(i);
  for (int i = 0; i < m; ++i) tab.t(m, n + i) = 0.0;
  tab.optimize(n + m);

  Result res;
  const double scale = 1.0 + b.cwiseAbs().sum();
  if (-tab.rhs(m) > 1e-9 * scale) {
    res.status = Status::kInfeasible;
    return res;
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // redundant and get zeroed.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (std::fabs(tab.t(i, j)) > kPivotEps) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(i, col);
    } else {
      tab.t.row(i).setZero();
    }
  }

  // Phase 2 objective row: reduced costs c_j - c_B^T B^{-1} A_j.
  tab.t.row(m).setZero();
  tab.t.row(m).head(n) = c.transpose();
  for (int i = 0; i < m; ++i) {
    const int bi = tab.basis[i];
    if (bi < n && c(bi) != 0.0) tab.t.row(m) -= c(bi) * tab.t.row(i);
  }
  // Artificial columns never re-enter.
  if (!tab.optimize(n)) {
    res.status = Status::kUnbounded;
    return res;
  }

  res.status = Status::kOptimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) res.x(tab.basis[i]) = tab.rhs(i);
  }
  res.objective = c.dot(res.x);
  return res;
}

}  // namespace greedy::lp
