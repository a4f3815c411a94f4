// Copyright 2026 The ICIC Scheduler Authors
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

#include "icic/lp_simplex.h"

#include <algorithm>
#include <cmath>

#include "icic/errors.h"

namespace icic::lp {

int LinearProgram::AddVar(double objective) {
  objective_.push_back(objective);
  return num_vars() - 1;
}

void LinearProgram::AddRow(const std::vector<std::pair<int, double>>& coef,
                           Sense sense, double rhs) {
  for (const auto& [var, value] : coef) {
    if (var < 0 || var >= num_vars()) {
      throw ConfigError("LP row references unknown variable");
    }
    (void)value;
  }
  rows_.push_back({coef, sense, rhs});
}

struct SimplexSolver {
  SimplexSolver(const LinearProgram& program, double tolerance)
      : lp(program), tol(tolerance) {}

  const LinearProgram& lp;
  double tol;
  int m = 0;       // rows
  int n_struct = 0;
  int n_total = 0;  // structural + slack/surplus + artificial
  int first_art = 0;
  // t[i][j], rows 0..m-1 constraints, column n_total is the rhs.
  std::vector<std::vector<double>> t;
  std::vector<int> basis;

  void Pivot(int r, int c) {
    const double p = t[r][c];
    for (double& v : t[r]) v /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = t[i][c];
      if (f == 0.0) continue;
      for (int j = 0; j <= n_total; ++j) t[i][j] -= f * t[r][j];
      t[i][c] = 0.0;
    }
    basis[r] = c;
  }

  // Maximizes cost over columns < limit. Returns false when unbounded.
  bool Optimize(const std::vector<double>& cost, int limit) {
    for (;;) {
      // Reduced cost d_j = c_j - c_B B^-1 A_j; Bland picks the first
      // improving column.
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        double d = cost[j];
        for (int i = 0; i < m; ++i) d -= cost[basis[i]] * t[i][j];
        if (d > tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] > tol) {
          const double ratio = t[i][n_total] / t[i][enter];
          if (leave < 0 || ratio < best - tol ||
              (ratio <= best + tol && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  LpResult Run() {
    m = lp.num_rows();
    n_struct = lp.num_vars();
    int n_slack = 0;
    int n_art = 0;
    for (const auto& row : lp.rows_) {
      if (row.sense != Sense::kEq) ++n_slack;
    }
    // Normalize to rhs >= 0 and count artificials.
    std::vector<double> sign(static_cast<std::size_t>(m), 1.0);
    std::vector<Sense> sense(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto& row = lp.rows_[i];
      sense[i] = row.sense;
      if (row.rhs < 0.0) {
        sign[i] = -1.0;
        if (row.sense == Sense::kLe) sense[i] = Sense::kGe;
        else if (row.sense == Sense::kGe) sense[i] = Sense::kLe;
      }
      if (sense[i] != Sense::kLe) ++n_art;
    }
    first_art = n_struct + n_slack;
    n_total = first_art + n_art;
    t.assign(static_cast<std::size_t>(m),
             std::vector<double>(static_cast<std::size_t>(n_total) + 1, 0.0));
    basis.assign(static_cast<std::size_t>(m), -1);
    int slack = n_struct;
    int art = first_art;
    for (int i = 0; i < m; ++i) {
      const auto& row = lp.rows_[i];
      for (const auto& [var, value] : row.coef) t[i][var] += sign[i] * value;
      t[i][n_total] = sign[i] * row.rhs;
      if (row.sense != Sense::kEq) {
        t[i][slack] = (sense[i] == Sense::kLe) ? 1.0 : -1.0;
        if (sense[i] == Sense::kLe) basis[i] = slack;
        ++slack;
      }
      if (sense[i] != Sense::kLe) {
        t[i][art] = 1.0;
        basis[i] = art++;
      }
    }

    LpResult res;
    if (n_art > 0) {
      std::vector<double> phase1(static_cast<std::size_t>(n_total), 0.0);
      for (int j = first_art; j < n_total; ++j) phase1[j] = -1.0;
      Optimize(phase1, n_total);
      double infeas = 0.0;
      for (int i = 0; i < m; ++i) {
        if (basis[i] >= first_art) infeas += t[i][n_total];
      }
      if (infeas > tol * std::max(1.0, static_cast<double>(m))) {
        res.status = LpResult::Status::kInfeasible;
        return res;
      }
      // Drive zero-level artificials out of the basis where possible.
      for (int i = 0; i < m; ++i) {
        if (basis[i] < first_art) continue;
        for (int j = 0; j < first_art; ++j) {
          if (std::abs(t[i][j]) > tol) {
            Pivot(i, j);
            break;
          }
        }
      }
    }
    std::vector<double> cost(static_cast<std::size_t>(n_total), 0.0);
    for (int j = 0; j < n_struct; ++j) cost[j] = lp.objective_[j];
    if (!Optimize(cost, first_art)) {
      res.status = LpResult::Status::kUnbounded;
      return res;
    }
    res.status = LpResult::Status::kOptimal;
    res.x.assign(static_cast<std::size_t>(n_struct), 0.0);
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n_struct) res.x[basis[i]] = t[i][n_total];
    }
    for (int j = 0; j < n_struct; ++j) res.objective += lp.objective_[j] * res.x[j];
    return res;
  }
};

LpResult Solve(const LinearProgram& lp, double tol) {
  SimplexSolver s(lp, tol);
  return s.Run();
}

}  // namespace icic::lp
