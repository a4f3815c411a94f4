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


#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "icic/errors.h"
#include "icic/lp_simplex.h"
#include "icic/mcnf.h"

namespace icic::mcnf {
namespace {

TEST(Solve, SingleArc) {
  FlowNetwork net;
  net.AddNode(1.0);
  net.AddNode(-1.0);
  net.AddArc(0, 1, 1.0, 5.0);
  const auto sol = Solve(net);
  EXPECT_EQ(sol.flow[0], 1.0);
  EXPECT_EQ(sol.objective, 5.0);
  EXPECT_TRUE(Verify(net, sol).empty());
}

TEST(Solve, CheapParallelArc) {
  FlowNetwork net;
  net.AddNode(1.0);
  net.AddNode(-1.0);
  net.AddArc(0, 1, 1.0, 1.0);
  net.AddArc(0, 1, 1.0, 3.0);
  const auto sol = Solve(net);
  EXPECT_EQ(sol.flow[0], 1.0);
  EXPECT_EQ(sol.flow[1], 0.0);
}

TEST(Solve, Errors) {
  FlowNetwork unbalanced;
  unbalanced.AddNode(1.0);
  unbalanced.AddNode(0.0);
  unbalanced.AddArc(0, 1, 1.0, 0.0);
  EXPECT_THROW(Solve(unbalanced), UnbalancedError);
  FlowNetwork tight;
  tight.AddNode(2.0);
  tight.AddNode(-2.0);
  tight.AddArc(0, 1, 1.0, 0.0);
  EXPECT_THROW(Solve(tight), InfeasibleError);
}

// Integral random network on `nodes` nodes.
FlowNetwork RandomNetwork(std::mt19937_64& rng, int nodes, int arcs) {
  std::uniform_int_distribution<int> node(0, nodes - 1), cap(1, 2),
      cost(-3, 6), supply(0, 2);
  FlowNetwork net;
  for (int i = 0; i < nodes; ++i) net.AddNode(0.0);
  const int s = node(rng);
  int t = node(rng);
  while (t == s) t = node(rng);
  const int b = supply(rng);
  net.set_supply(s, b);
  net.set_supply(t, -b);
  for (int a = 0; a < arcs; ++a) {
    int u = node(rng), v = node(rng);
    while (v == u) v = node(rng);
    net.AddArc(u, v, cap(rng), cost(rng));
  }
  return net;
}

// Minimum cost over all integral flows within capacities, or NaN.
double BruteForce(const FlowNetwork& net) {
  const int arcs = net.num_arcs();
  std::vector<int> f(arcs, 0);
  double best = NAN;
  std::function<void(int)> rec = [&](int a) {
    if (a == arcs) {
      std::vector<double> bal(net.num_nodes(), 0.0);
      double cost = 0.0;
      for (int i = 0; i < arcs; ++i) {
        bal[net.arc(i).tail] += f[i];
        bal[net.arc(i).head] -= f[i];
        cost += f[i] * net.arc(i).cost;
      }
      for (int v = 0; v < net.num_nodes(); ++v) {
        if (bal[v] != net.supply(v)) return;
      }
      if (std::isnan(best) || cost < best) best = cost;
      return;
    }
    for (int x = 0; x <= static_cast<int>(net.arc(a).capacity); ++x) {
      f[a] = x;
      rec(a + 1);
    }
  };
  rec(0);
  return best;
}

bool HasNegativeCycle(const FlowNetwork& net) {
  std::vector<double> d(net.num_nodes(), 0.0);
  for (int it = 0; it < net.num_nodes(); ++it) {
    bool changed = false;
    for (const Arc& a : net.arcs()) {
      if (d[a.tail] + a.cost < d[a.head] - 1e-12) {
        d[a.head] = d[a.tail] + a.cost;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

TEST(Solve, MatchesIntegralEnumeration) {
  std::mt19937_64 rng(17);
  int solved = 0;
  for (int s = 0; s < 400 && solved < 100; ++s) {
    const FlowNetwork net = RandomNetwork(rng, 8, 9);
    if (HasNegativeCycle(net)) continue;
    const double best = BruteForce(net);
    if (std::isnan(best)) {
      EXPECT_THROW(Solve(net), InfeasibleError);
      continue;
    }
    const auto sol = Solve(net);
    EXPECT_NEAR(sol.objective, best, 1e-9);
    EXPECT_TRUE(Verify(net, sol).empty());
    ++solved;
  }
  EXPECT_GE(solved, 50);
}

TEST(Verify, CorruptedFlowFlagsTwoNodes) {
  FlowNetwork net;
  net.AddNode(1.0);
  net.AddNode(0.0);
  net.AddNode(-1.0);
  net.AddArc(0, 1, 2.0, 1.0);
  net.AddArc(1, 2, 2.0, 1.0);
  auto sol = Solve(net);
  sol.flow[0] += 0.1;
  sol.objective += 0.1;
  int balance = 0;
  for (const auto& msg : Verify(net, sol)) {
    if (msg.find("balance") != std::string::npos) ++balance;
  }
  EXPECT_EQ(balance, 2);
}

TEST(Verify, PotentialGaugeInvariance) {
  std::mt19937_64 rng(23);
  for (int s = 0; s < 50; ++s) {
    const FlowNetwork net = RandomNetwork(rng, 6, 10);
    if (HasNegativeCycle(net)) continue;
    FlowSolution sol;
    try {
      sol = Solve(net);
    } catch (const InfeasibleError&) {
      continue;
    }
    for (double& p : sol.potential) p += 7.25;
    EXPECT_TRUE(Verify(net, sol).empty());
  }
}

TEST(Solve, FractionalDataMatchesLp) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int s = 0; s < 60; ++s) {
    FlowNetwork net;
    const int nodes = 6;
    for (int i = 0; i < nodes; ++i) net.AddNode(0.0);
    const double b = u(rng);
    net.set_supply(0, b);
    net.set_supply(nodes - 1, -b);
    for (int i = 0; i + 1 < nodes; ++i) net.AddArc(i, i + 1, 1.0, u(rng));
    for (int a = 0; a < 8; ++a) {
      const int t = static_cast<int>(u(rng) * (nodes - 1));
      const int h = t + 1 + static_cast<int>(u(rng) * (nodes - 1 - t));
      net.AddArc(t, h, u(rng), u(rng) * 2.0 - 1.0);
    }
    const auto sol = Solve(net);
    EXPECT_TRUE(Verify(net, sol).empty());
    lp::LinearProgram prog(net.num_arcs());
    for (int a = 0; a < net.num_arcs(); ++a) {
      prog.set_objective(a, -net.arc(a).cost);
      prog.AddRow({{a, 1.0}}, lp::Sense::kLe, net.arc(a).capacity);
    }
    for (int v = 0; v < nodes; ++v) {
      std::vector<std::pair<int, double>> row;
      for (int a = 0; a < net.num_arcs(); ++a) {
        if (net.arc(a).tail == v) row.emplace_back(a, 1.0);
        if (net.arc(a).head == v) row.emplace_back(a, -1.0);
      }
      prog.AddRow(row, lp::Sense::kEq, net.supply(v));
    }
    const auto res = lp::Solve(prog);
    ASSERT_EQ(res.status, lp::LpResult::Status::kOptimal);
    EXPECT_NEAR(sol.objective, -res.objective, 1e-9);
  }
}

TEST(Dimacs, RoundTrip) {
  FlowNetwork net;
  net.AddNode(0.75);
  net.AddNode(-0.75);
  net.AddArc(0, 1, 1.5, -0.1);
  std::stringstream ss;
  net.WriteDimacs(ss);
  const FlowNetwork back = FlowNetwork::ReadDimacs(ss);
  ASSERT_EQ(back.num_nodes(), 2);
  ASSERT_EQ(back.num_arcs(), 1);
  EXPECT_EQ(back.supply(0), 0.75);
  EXPECT_EQ(back.arc(0).capacity, 1.5);
  EXPECT_EQ(back.arc(0).cost, -0.1);
}

TEST(Lp, InfeasibleAndUnbounded) {
  lp::LinearProgram a(1);
  a.set_objective(0, 1.0);
  a.AddRow({{0, 1.0}}, lp::Sense::kGe, 2.0);
  a.AddRow({{0, 1.0}}, lp::Sense::kLe, 1.0);
  EXPECT_EQ(lp::Solve(a).status, lp::LpResult::Status::kInfeasible);
  lp::LinearProgram b(1);
  b.set_objective(0, 1.0);
  EXPECT_EQ(lp::Solve(b).status, lp::LpResult::Status::kUnbounded);
}

}  // namespace
}  // namespace icic::mcnf
