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

// Subproblem of one sector on one RB: the weighted bound-rate scheduling LP
// for fixed blanking, solved as a min-cost flow.

#ifndef ICIC_CORE_SUBPROBLEM_H_
#define ICIC_CORE_SUBPROBLEM_H_

#include <span>
#include <vector>

#include "icic/core/blanking.h"
#include "icic/link_adapt.h"
#include "icic/mcnf.h"
#include "icic/net_model.h"

namespace icic::core {

// Everything subproblem (k, n) reads.
struct SubproblemInput {
  int k = 0;
  int n = 0;
  double own_blanking = 0.0;                  // I^(k)_n
  std::span<const double> neighbor_blanking;  // I^(j)_n per neighbor slot
  std::span<const double> weights;            // w_m, m < M^(k)
  const link::RateTriples* triples = nullptr;

  static SubproblemInput Gather(int k, int n, const BlankingMatrix& blanking,
                                const net::NeighborMap& neighbors,
                                std::span<const double> weights,
                                const link::RateTriples& triples,
                                std::vector<double>& scratch);
};

// Node and arc numbering of the flow network.
struct SubproblemLayout {
  int users = 0;
  int degree = 0;

  int rb_node() const { return 0; }
  int user_node(int m) const { return 1 + m; }
  int neighbor_node(int i) const { return 1 + users + i; }
  int collector() const { return 1 + users + degree; }
  int num_nodes() const { return 2 + users + degree; }

  int x_arc(int m) const { return m; }
  int y_arc(int m, int i) const { return users + m * degree + i; }
  int slack_arc(int m) const { return users + users * degree + m; }
  int neighbor_slack_arc(int i) const {
    return 2 * users + users * degree + i;
  }
  int num_arcs() const { return (degree + 2) * users + degree; }
};

// Slack arcs get capacity 2: the slacks never exceed 1, so the bound is
// inactive and leaves the duals of the inequality rows sign-correct.
inline constexpr double kSlackCapacity = 2.0;

mcnf::FlowNetwork BuildSubproblemNetwork(const SubproblemInput& in);

struct SubproblemSolution {
  std::vector<double> x;  // per user
  std::vector<double> y;  // [m * degree + i]
  double value = 0.0;     // phi
  // Multiplier of sum_m x_m = 1 - I^(k); d phi / d I^(k) = -own_dual.
  double own_dual = 0.0;
  // Multipliers of sum_m y_{m,i} <= I^(j_i), >= 0.
  std::vector<double> neighbor_dual;
};

// Optional copies of the network and raw flow for inspection.
struct SubproblemTrace {
  mcnf::FlowNetwork network;
  mcnf::FlowSolution flow;
};

SubproblemSolution SolveSubproblem(const SubproblemInput& in,
                                   SubproblemTrace* trace = nullptr);

// sum_m w_m (x_m r_m + sum_i y_{m,i} r~_{m,i}) in a fixed order.
double SubproblemObjective(const SubproblemInput& in,
                           std::span<const double> x,
                           std::span<const double> y);

}  // namespace icic::core

#endif  // ICIC_CORE_SUBPROBLEM_H_
