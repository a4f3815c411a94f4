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

#include "icic/core/subproblem.h"

#include <algorithm>

#include "icic/errors.h"

namespace icic::core {

SubproblemInput SubproblemInput::Gather(int k, int n,
                                        const BlankingMatrix& blanking,
                                        const net::NeighborMap& neighbors,
                                        std::span<const double> weights,
                                        const link::RateTriples& triples,
                                        std::vector<double>& scratch) {
  const auto nbrs = neighbors.of(k);
  scratch.resize(nbrs.size());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    scratch[i] = blanking(nbrs[i], n);
  }
  SubproblemInput in;
  in.k = k;
  in.n = n;
  in.own_blanking = blanking(k, n);
  in.neighbor_blanking = scratch;
  in.weights = weights;
  in.triples = &triples;
  return in;
}

mcnf::FlowNetwork BuildSubproblemNetwork(const SubproblemInput& in) {
  const link::RateTriples& t = *in.triples;
  const int users = t.users(in.k);
  const int degree = t.degree(in.k);
  if (static_cast<int>(in.weights.size()) != users ||
      static_cast<int>(in.neighbor_blanking.size()) != degree) {
    throw ConfigError("subproblem input sizes disagree with rate triples");
  }
  const SubproblemLayout lay{users, degree};
  mcnf::FlowNetwork net;
  double collector_supply = -1.0 + in.own_blanking;
  for (double b : in.neighbor_blanking) collector_supply += b;
  net.AddNode(1.0 - in.own_blanking);
  for (int m = 0; m < users; ++m) net.AddNode(0.0);
  for (int i = 0; i < degree; ++i) net.AddNode(-in.neighbor_blanking[i]);
  net.AddNode(collector_supply);

  for (int m = 0; m < users; ++m) {
    net.AddArc(lay.rb_node(), lay.user_node(m), 1.0,
               -in.weights[m] * t.base(in.k, m, in.n));
  }
  for (int m = 0; m < users; ++m) {
    for (int i = 0; i < degree; ++i) {
      net.AddArc(lay.user_node(m), lay.neighbor_node(i), 1.0,
                 -in.weights[m] * t.extra(in.k, m, in.n, i));
    }
  }
  for (int m = 0; m < users; ++m) {
    net.AddArc(lay.user_node(m), lay.collector(), kSlackCapacity, 0.0);
  }
  for (int i = 0; i < degree; ++i) {
    net.AddArc(lay.collector(), lay.neighbor_node(i), kSlackCapacity, 0.0);
  }
  return net;
}

double SubproblemObjective(const SubproblemInput& in,
                           std::span<const double> x,
                           std::span<const double> y) {
  const link::RateTriples& t = *in.triples;
  const int users = t.users(in.k);
  const int degree = t.degree(in.k);
  double value = 0.0;
  for (int m = 0; m < users; ++m) {
    double rate = x[m] * t.base(in.k, m, in.n);
    for (int i = 0; i < degree; ++i) {
      rate += y[static_cast<std::size_t>(m) * degree + i] *
              t.extra(in.k, m, in.n, i);
    }
    value += in.weights[m] * rate;
  }
  return value;
}

SubproblemSolution SolveSubproblem(const SubproblemInput& in,
                                   SubproblemTrace* trace) {
  mcnf::FlowNetwork net = BuildSubproblemNetwork(in);
  mcnf::FlowSolution flow;
  try {
    flow = mcnf::Solve(net);
  } catch (const InfeasibleError& e) {
    // Slack arcs make every I in [0, 1] feasible.
    throw Error(std::string("subproblem unexpectedly infeasible: ") +
                e.what());
  }
  const link::RateTriples& t = *in.triples;
  const SubproblemLayout lay{t.users(in.k), t.degree(in.k)};
  SubproblemSolution sol;
  sol.x.resize(static_cast<std::size_t>(lay.users));
  sol.y.resize(static_cast<std::size_t>(lay.users) * lay.degree);
  for (int m = 0; m < lay.users; ++m) {
    sol.x[m] = flow.flow[lay.x_arc(m)];
    for (int i = 0; i < lay.degree; ++i) {
      sol.y[static_cast<std::size_t>(m) * lay.degree + i] =
          flow.flow[lay.y_arc(m, i)];
    }
  }
  sol.value = SubproblemObjective(in, sol.x, sol.y);
  // Gauge: collector potential 0.
  const double ref = flow.potential[lay.collector()];
  sol.own_dual = -(flow.potential[lay.rb_node()] - ref);
  sol.neighbor_dual.resize(static_cast<std::size_t>(lay.degree));
  for (int i = 0; i < lay.degree; ++i) {
    sol.neighbor_dual[i] =
        std::max(flow.potential[lay.neighbor_node(i)] - ref, 0.0);
  }
  if (trace != nullptr) {
    trace->network = std::move(net);
    trace->flow = std::move(flow);
  }
  return sol;
}

}  // namespace icic::core
