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

// Dense two-phase tableau simplex with Bland's rule. Small reference LPs
// only: it backs the flow-solver cross-checks and the relaxation tests.

#ifndef ICIC_LP_SIMPLEX_H_
#define ICIC_LP_SIMPLEX_H_

#include <vector>

namespace icic::lp {

enum class Sense { kLe, kEq, kGe };

// maximize c.x  s.t.  rows, x >= 0.
class LinearProgram {
 public:
  explicit LinearProgram(int vars = 0) : objective_(vars, 0.0) {}

  int AddVar(double objective);
  void set_objective(int var, double c) { objective_[var] = c; }
  // Coefficients as (var, value) pairs.
  void AddRow(const std::vector<std::pair<int, double>>& coef, Sense sense,
              double rhs);

  int num_vars() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

 private:
  friend struct SimplexSolver;
  struct Row {
    std::vector<std::pair<int, double>> coef;
    Sense sense;
    double rhs;
  };
  std::vector<double> objective_;
  std::vector<Row> rows_;
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;  // structural variables, a basic solution
};

LpResult Solve(const LinearProgram& lp, double tol = 1e-9);

}  // namespace icic::lp

#endif  // ICIC_LP_SIMPLEX_H_
