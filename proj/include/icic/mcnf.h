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

// Minimum-cost network flow with real supplies and capacities. Successive
// shortest paths on reduced costs; node potentials are returned as duals.

#ifndef ICIC_MCNF_H_
#define ICIC_MCNF_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace icic::mcnf {

inline constexpr double kBalanceTol = 1e-12;
inline constexpr double kResidualEps = 1e-12;
inline constexpr double kOptimalityTol = 1e-9;

struct Arc {
  int tail;
  int head;
  double capacity;
  double cost;
};

// Node supplies b (positive = source) and arcs with lower bound 0.
class FlowNetwork {
 public:
  int AddNode(double supply);
  int AddArc(int tail, int head, double capacity, double cost);

  int num_nodes() const { return static_cast<int>(supply_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  double supply(int i) const { return supply_[i]; }
  void set_supply(int i, double b) { supply_[i] = b; }
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  double TotalSupply() const;

  // DIMACS-like text: `p min <nodes> <arcs>`, `n <id> <supply>`,
  // `a <tail> <head> <low> <cap> <cost>`, 1-based ids, `c` comments.
  void WriteDimacs(std::ostream& out) const;
  static FlowNetwork ReadDimacs(std::istream& in);

 private:
  std::vector<double> supply_;
  std::vector<Arc> arcs_;
};

struct FlowSolution {
  std::vector<double> flow;       // per arc
  std::vector<double> potential;  // per node
  double objective = 0.0;         // sum of cost * flow

  // c - pi_tail + pi_head.
  double ReducedCost(const FlowNetwork& net, int a) const;
};

// Throws UnbalancedError when |sum b| > kBalanceTol and InfeasibleError
// when the supplies cannot be routed. Potentials satisfy reduced cost >= 0
// on arcs below capacity and <= 0 on arcs carrying flow.
FlowSolution Solve(const FlowNetwork& net);

// Feasibility and complementary slackness at `tol`. Returns one
// message per violation; empty means the solution is certified optimal.
std::vector<std::string> Verify(const FlowNetwork& net,
                                const FlowSolution& sol,
                                double tol = kOptimalityTol);

}  // namespace icic::mcnf

#endif  // ICIC_MCNF_H_
