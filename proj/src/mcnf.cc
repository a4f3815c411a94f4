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

#include "icic/mcnf.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "icic/errors.h"

namespace icic::mcnf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Distance improvements below this are ignored so rounding noise cannot
// cycle Bellman-Ford forever.
constexpr double kRelaxEps = 1e-12;

// Residual graph with paired forward/backward edges (e, e ^ 1).
struct Residual {
  struct Edge {
    int to;
    double cap;
    double cost;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;

  explicit Residual(int n) : out(static_cast<std::size_t>(n)) {}

  int Add(int from, int to, double cap, double cost) {
    const int e = static_cast<int>(edges.size());
    edges.push_back({to, cap, cost});
    edges.push_back({from, 0.0, -cost});
    out[from].push_back(e);
    out[to].push_back(e + 1);
    return e;
  }
  void Push(int e, double amount) {
    edges[e].cap -= amount;
    edges[e ^ 1].cap += amount;
    if (edges[e].cap < kResidualEps) edges[e].cap = 0.0;
  }
  int size() const { return static_cast<int>(out.size()); }
};

// Shortest distances over edges with residual capacity, from every node
// whose initial distance is finite. Throws on a negative cycle.
void BellmanFord(const Residual& g, std::vector<double>& dist) {
  const int n = g.size();
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (int u = 0; u < n; ++u) {
      if (dist[u] == kInf) continue;
      for (int e : g.out[u]) {
        const auto& edge = g.edges[e];
        if (edge.cap <= 0.0) continue;
        const double cand = dist[u] + edge.cost;
        if (cand < dist[edge.to] - kRelaxEps) {
          dist[edge.to] = cand;
          changed = true;
        }
      }
    }
    if (!changed) return;
  }
  throw Error("negative-cost cycle in flow network");
}

}  // namespace

int FlowNetwork::AddNode(double supply) {
  if (!std::isfinite(supply)) throw ConfigError("non-finite node supply");
  supply_.push_back(supply);
  return num_nodes() - 1;
}

int FlowNetwork::AddArc(int tail, int head, double capacity, double cost) {
  if (tail < 0 || tail >= num_nodes() || head < 0 || head >= num_nodes()) {
    throw ConfigError("arc endpoint out of range");
  }
  if (!(capacity >= 0.0) || !std::isfinite(capacity)) {
    throw ConfigError("arc capacity must be finite and >= 0");
  }
  if (!std::isfinite(cost)) throw ConfigError("non-finite arc cost");
  arcs_.push_back({tail, head, capacity, cost});
  return num_arcs() - 1;
}

double FlowNetwork::TotalSupply() const {
  double sum = 0.0;
  for (double b : supply_) sum += b;
  return sum;
}

void FlowNetwork::WriteDimacs(std::ostream& out) const {
  char buf[128];
  out << "c min-cost flow instance, real-valued fields\n";
  out << "p min " << num_nodes() << ' ' << num_arcs() << '\n';
  for (int i = 0; i < num_nodes(); ++i) {
    std::snprintf(buf, sizeof buf, "n %d %.17g\n", i + 1, supply_[i]);
    out << buf;
  }
  for (const Arc& a : arcs_) {
    std::snprintf(buf, sizeof buf, "a %d %d 0 %.17g %.17g\n", a.tail + 1,
                  a.head + 1, a.capacity, a.cost);
    out << buf;
  }
}

FlowNetwork FlowNetwork::ReadDimacs(std::istream& in) {
  FlowNetwork net;
  std::string line;
  int line_no = 0;
  int declared_arcs = -1;
  auto fail = [&](const std::string& what) {
    throw ConfigError("flow file line " + std::to_string(line_no) + ": " +
                      what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      int nodes = 0;
      if (!(ss >> kind >> nodes >> declared_arcs) || kind != "min" ||
          nodes < 0 || declared_arcs < 0) {
        fail("bad problem line");
      }
      if (net.num_nodes() != 0) fail("duplicate problem line");
      for (int i = 0; i < nodes; ++i) net.AddNode(0.0);
    } else if (tag == "n") {
      int id = 0;
      double b = 0.0;
      if (!(ss >> id >> b)) fail("bad node line");
      if (id < 1 || id > net.num_nodes()) fail("node id out of range");
      net.set_supply(id - 1, b);
    } else if (tag == "a") {
      int t = 0, h = 0;
      double low = 0.0, cap = 0.0, cost = 0.0;
      if (!(ss >> t >> h >> low >> cap >> cost)) fail("bad arc line");
      if (low != 0.0) fail("nonzero lower bounds are not supported");
      try {
        net.AddArc(t - 1, h - 1, cap, cost);
      } catch (const ConfigError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (declared_arcs >= 0 && declared_arcs != net.num_arcs()) {
    throw ConfigError("flow file declares " + std::to_string(declared_arcs) +
                      " arcs but lists " + std::to_string(net.num_arcs()));
  }
  return net;
}

double FlowSolution::ReducedCost(const FlowNetwork& net, int a) const {
  const Arc& arc = net.arc(a);
  return arc.cost - potential[arc.tail] + potential[arc.head];
}

FlowSolution Solve(const FlowNetwork& net) {
  const double imbalance = net.TotalSupply();
  if (std::abs(imbalance) > kBalanceTol) {
    throw UnbalancedError("supplies sum to " + std::to_string(imbalance));
  }
  const int n = net.num_nodes();
  const int source = n;
  const int sink = n + 1;
  Residual g(n + 2);
  std::vector<int> arc_edge(static_cast<std::size_t>(net.num_arcs()));
  for (int a = 0; a < net.num_arcs(); ++a) {
    const Arc& arc = net.arc(a);
    arc_edge[a] = g.Add(arc.tail, arc.head, arc.capacity, arc.cost);
  }
  double demand = 0.0;
  for (int i = 0; i < n; ++i) {
    const double b = net.supply(i);
    if (b > 0.0) {
      g.Add(source, i, b, 0.0);
      demand += b;
    } else if (b < 0.0) {
      g.Add(i, sink, -b, 0.0);
    }
  }

  // Initial potentials make every residual edge reachable from the source
  // nonnegative in reduced cost.
  std::vector<double> pot(static_cast<std::size_t>(n + 2), kInf);
  pot[source] = 0.0;
  BellmanFord(g, pot);
  for (double& p : pot) {
    if (p == kInf) p = 0.0;
  }

  double remaining = demand;
  std::vector<double> dist(pot.size());
  std::vector<int> via(pot.size());
  std::vector<char> done(pot.size());
  while (remaining > kResidualEps) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    dist[source] = 0.0;
    // Dense Dijkstra; graphs here are small.
    for (;;) {
      int u = -1;
      for (int v = 0; v < g.size(); ++v) {
        if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
      }
      if (u < 0) break;
      done[u] = 1;
      for (int e : g.out[u]) {
        const auto& edge = g.edges[e];
        if (edge.cap <= 0.0 || done[edge.to]) continue;
        const double rc = std::max(edge.cost + pot[u] - pot[edge.to], 0.0);
        if (dist[u] + rc < dist[edge.to]) {
          dist[edge.to] = dist[u] + rc;
          via[edge.to] = e;
        }
      }
    }
    if (dist[sink] == kInf) break;
    for (int v = 0; v < g.size(); ++v) {
      if (dist[v] < kInf) pot[v] += dist[v];
    }
    double push = remaining;
    for (int v = sink; v != source; v = g.edges[via[v] ^ 1].to) {
      push = std::min(push, g.edges[via[v]].cap);
    }
    for (int v = sink; v != source; v = g.edges[via[v] ^ 1].to) {
      g.Push(via[v], push);
    }
    remaining -= push;
  }
  if (remaining > kOptimalityTol) {
    throw InfeasibleError("cannot route " + std::to_string(remaining) +
                          " units of supply");
  }

  FlowSolution sol;
  sol.flow.resize(static_cast<std::size_t>(net.num_arcs()));
  for (int a = 0; a < net.num_arcs(); ++a) {
    sol.flow[a] = g.edges[arc_edge[a] ^ 1].cap;
    sol.objective += net.arc(a).cost * sol.flow[a];
  }

  // Duals: shortest distances in the residual graph of the original nodes
  // from a virtual root joined to every node at cost 0, negated.
  Residual r(n);
  for (int a = 0; a < net.num_arcs(); ++a) {
    const Arc& arc = net.arc(a);
    const double up = g.edges[arc_edge[a]].cap;
    const double down = sol.flow[a];
    if (up > 0.0) r.Add(arc.tail, arc.head, up, arc.cost);
    if (down > kResidualEps) r.Add(arc.head, arc.tail, down, -arc.cost);
  }
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  BellmanFord(r, d);
  sol.potential.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sol.potential[i] = d[i] == 0.0 ? 0.0 : -d[i];
  return sol;
}

std::vector<std::string> Verify(const FlowNetwork& net,
                                const FlowSolution& sol, double tol) {
  std::vector<std::string> issues;
  if (static_cast<int>(sol.flow.size()) != net.num_arcs() ||
      static_cast<int>(sol.potential.size()) != net.num_nodes()) {
    issues.push_back("solution dimensions do not match the network");
    return issues;
  }
  std::vector<double> net_out(static_cast<std::size_t>(net.num_nodes()), 0.0);
  for (int a = 0; a < net.num_arcs(); ++a) {
    const Arc& arc = net.arc(a);
    const double f = sol.flow[a];
    if (f < -tol || f > arc.capacity + tol) {
      issues.push_back("arc " + std::to_string(a) + " flow " +
                       std::to_string(f) + " outside [0, " +
                       std::to_string(arc.capacity) + "]");
    }
    net_out[arc.tail] += f;
    net_out[arc.head] -= f;
    const double rc = sol.ReducedCost(net, a);
    if (f < arc.capacity - tol && rc < -tol) {
      issues.push_back("arc " + std::to_string(a) +
                       " below capacity with negative reduced cost " +
                       std::to_string(rc));
    }
    if (f > tol && rc > tol) {
      issues.push_back("arc " + std::to_string(a) +
                       " carries flow with positive reduced cost " +
                       std::to_string(rc));
    }
  }
  for (int i = 0; i < net.num_nodes(); ++i) {
    if (std::abs(net_out[i] - net.supply(i)) > tol) {
      issues.push_back("node " + std::to_string(i) + " mass balance off by " +
                       std::to_string(net_out[i] - net.supply(i)));
    }
  }
  return issues;
}

}  // namespace icic::mcnf
