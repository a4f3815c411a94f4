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

#include "icic/oracle.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "icic/errors.h"
#include "icic/lp_simplex.h"

namespace icic::oracle {
namespace {

constexpr double kBinaryTol = 1e-6;

void CheckSectorBudget(int sectors) {
  if (sectors > kMaxSectors) {
    throw BudgetExceededError("exhaustive search over " +
                              std::to_string(sectors) + " sectors exceeds 2^" +
                              std::to_string(kMaxSectors) + " patterns");
  }
}

net::NeighborMap DeskNeighbors(const DeskOptions& o) {
  if (o.topology == DeskOptions::Topology::kHex) {
    if (o.sectors % 3 != 0) {
      throw ConfigError("hex desk topology needs a multiple of 3 sectors");
    }
    const auto dims = net::NetworkDims::TriSector(o.sectors / 3, o.users, o.rbs);
    return net::GeometricNeighbors(net::GenerateLayout(dims, 500.0));
  }
  std::vector<int> offsets;
  for (int d = 1; d <= o.ring_degree / 2; ++d) offsets.push_back(d);
  if (o.ring_degree % 2 == 1) {
    if (o.sectors % 2 != 0) {
      throw ConfigError("odd ring degree needs an even sector count");
    }
    offsets.push_back(o.sectors / 2);
  }
  return net::NeighborMap::Circulant(o.sectors, offsets);
}

double PatternObjective(const DeskInstance& inst, int n,
                        const std::vector<double>& column, bool bound) {
  double total = 0.0;
  for (int k = 0; k < inst.sectors(); ++k) {
    if (column[k] != 0.0) continue;
    double best = 0.0;
    for (int m = 0; m < inst.channel.users(k); ++m) {
      const auto gains = inst.channel.gains(k, m, n);
      const double sinr =
          bound ? link::SinrBound(gains, k, column, inst.neighbors.of(k),
                                  inst.radio)
                : link::SinrExact(gains, k, column, inst.radio);
      best = std::max(best, inst.weights[k][m] * inst.link.Rate(sinr));
    }
    total += best;
  }
  return total;
}

ExhaustiveResult Exhaustive(const DeskInstance& inst, bool bound) {
  const int sectors = inst.sectors();
  CheckSectorBudget(sectors);
  ExhaustiveResult res;
  res.blanking = core::BlankingMatrix(sectors, inst.rbs());
  std::vector<double> column(static_cast<std::size_t>(sectors));
  for (int n = 0; n < inst.rbs(); ++n) {
    double best = -1.0;
    unsigned best_pattern = 0;
    for (unsigned pattern = 0; pattern < (1u << sectors); ++pattern) {
      for (int j = 0; j < sectors; ++j) column[j] = (pattern >> j) & 1u;
      const double v = PatternObjective(inst, n, column, bound);
      if (v > best) {
        best = v;
        best_pattern = pattern;
      }
    }
    res.value += best;
    for (int j = 0; j < sectors; ++j) {
      res.blanking(j, n) = (best_pattern >> j) & 1u;
    }
  }
  if (bound) {
    std::vector<double> scratch;
    for (int n = 0; n < inst.rbs(); ++n) {
      for (int k = 0; k < sectors; ++k) {
        const auto in = core::SubproblemInput::Gather(
            k, n, res.blanking, inst.neighbors, inst.weights[k], inst.triples,
            scratch);
        res.linear_value += EnumerateSubproblem(in).value;
      }
    }
  }
  return res;
}

}  // namespace

DeskInstance MakeDeskInstance(const DeskOptions& o, std::uint64_t seed) {
  if (o.sectors < 1 || o.users < 1 || o.rbs < 1) {
    throw ConfigError("desk instance dimensions must be positive");
  }
  DeskInstance inst;
  inst.neighbors = DeskNeighbors(o);
  inst.radio.tx_power_per_rb_w = 1.0;
  inst.radio.noise_per_rb_w = 1.0;
  inst.channel = net::ChannelTensor(
      o.sectors, std::vector<int>(static_cast<std::size_t>(o.sectors), o.users),
      o.rbs);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
  for (int k = 0; k < o.sectors; ++k) {
    const auto list = inst.neighbors.of(k);
    std::vector<int> order(list.begin(), list.end());
    for (int m = 0; m < o.users; ++m) {
      for (int n = 0; n < o.rbs; ++n) {
        const double serving = net::DbToLinear(uniform(o.snr_low_db, o.snr_high_db));
        for (int j = 0; j < o.sectors; ++j) {
          inst.channel.gain(k, m, n, j) =
              j == k ? serving
                     : serving * net::DbToLinear(o.far_db + uniform(-5.0, 5.0));
        }
        // Fisher-Yates with explicit draws so the order is portable.
        for (std::size_t i = order.size(); i > 1; --i) {
          const auto pick = static_cast<std::size_t>(u01(rng) * i);
          std::swap(order[i - 1], order[std::min(pick, i - 1)]);
        }
        double g = serving * net::DbToLinear(-uniform(o.sir_low_db, o.sir_high_db));
        for (int j : order) {
          inst.channel.gain(k, m, n, j) = g;
          g *= net::DbToLinear(-(o.dominance_db + uniform(0.0, 5.0)));
        }
      }
    }
  }
  inst.weights.resize(static_cast<std::size_t>(o.sectors));
  for (auto& row : inst.weights) {
    row.resize(static_cast<std::size_t>(o.users));
    for (double& w : row) w = uniform(o.weight_low, o.weight_high);
  }
  inst.triples = link::PrecomputeRateTriples(inst.channel, inst.radio,
                                             inst.neighbors, inst.link);
  return inst;
}

ExhaustiveResult ExhaustiveOriginal(const DeskInstance& inst) {
  return Exhaustive(inst, false);
}

ExhaustiveResult ExhaustiveBound(const DeskInstance& inst) {
  return Exhaustive(inst, true);
}

EnumeratedSubproblem EnumerateSubproblem(const core::SubproblemInput& in) {
  const link::RateTriples& t = *in.triples;
  const int users = t.users(in.k);
  const int degree = t.degree(in.k);
  const int bits = users * degree;
  if (bits > kMaxSubproblemBits) {
    throw BudgetExceededError("subproblem enumeration over 2^" +
                              std::to_string(bits) + " points");
  }
  auto is_bit = [](double v) { return v == 0.0 || v == 1.0; };
  if (!is_bit(in.own_blanking) ||
      !std::all_of(in.neighbor_blanking.begin(), in.neighbor_blanking.end(),
                   is_bit)) {
    throw ConfigError("subproblem enumeration needs binary blanking");
  }
  EnumeratedSubproblem best;
  best.value = -1.0;
  std::vector<double> x(static_cast<std::size_t>(users));
  std::vector<double> y(static_cast<std::size_t>(bits));
  // x choices: nobody when blanked, otherwise exactly one user.
  const int x_choices = in.own_blanking == 1.0 ? 1 : users;
  for (int choice = 0; choice < x_choices; ++choice) {
    std::fill(x.begin(), x.end(), 0.0);
    if (in.own_blanking == 0.0) x[choice] = 1.0;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      for (int b = 0; b < bits; ++b) y[b] = (mask >> b) & 1u;
      bool ok = true;
      for (int m = 0; m < users && ok; ++m) {
        double s = 0.0;
        for (int i = 0; i < degree; ++i) s += y[m * degree + i];
        ok = s <= x[m];
      }
      for (int i = 0; i < degree && ok; ++i) {
        double s = 0.0;
        for (int m = 0; m < users; ++m) s += y[m * degree + i];
        ok = s <= in.neighbor_blanking[i];
      }
      if (!ok) continue;
      const double v = core::SubproblemObjective(in, x, y);
      if (v > best.value) {
        best.value = v;
        best.x = x;
        best.y = y;
      }
    }
  }
  return best;
}

SetEquivalenceReport SetEquivalenceCheck(int users, int degree,
                                         bool single_assignment) {
  const int ybits = users * degree;
  if (users < 1 || degree < 1 || ybits + users + degree > 24) {
    throw BudgetExceededError("set equivalence check too large");
  }
  SetEquivalenceReport rep;
  for (unsigned xm = 0; xm < (1u << users); ++xm) {
    if (single_assignment && __builtin_popcount(xm) > 1) continue;
    for (unsigned im = 0; im < (1u << degree); ++im) {
      ++rep.contexts;
      for (unsigned ym = 0; ym < (1u << ybits); ++ym) {
        ++rep.points;
        auto y = [&](int m, int i) { return (ym >> (m * degree + i)) & 1u; };
        auto x = [&](int m) { return (xm >> m) & 1u; };
        auto ii = [&](int i) { return (im >> i) & 1u; };
        bool in_c = true;
        for (int m = 0; m < users; ++m) {
          unsigned s = 0;
          for (int i = 0; i < degree; ++i) {
            s += y(m, i);
            if (y(m, i) > x(m) || y(m, i) > ii(i)) in_c = false;
          }
          if (s > 1) in_c = false;
        }
        bool in_cp = true;
        for (int m = 0; m < users; ++m) {
          unsigned s = 0;
          for (int i = 0; i < degree; ++i) s += y(m, i);
          if (s > x(m)) in_cp = false;
        }
        for (int i = 0; i < degree; ++i) {
          unsigned s = 0;
          for (int m = 0; m < users; ++m) s += y(m, i);
          if (s > ii(i)) in_cp = false;
        }
        if (in_c != in_cp) ++rep.mismatches;
      }
    }
  }
  rep.equal = rep.mismatches == 0;
  return rep;
}

SinrBoundIdentityReport SinrBoundIdentityCheck(long samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
  SinrBoundIdentityReport rep;
  for (long s = 0; s < samples; ++s) {
    const int sectors = 2 + static_cast<int>(u01(rng) * 7);  // 2..8
    net::RadioConfig radio;
    radio.tx_power_per_rb_w = std::pow(10.0, uniform(-1.0, 1.0));
    radio.noise_per_rb_w = std::pow(10.0, uniform(-2.0, 0.0));
    std::vector<double> gains(static_cast<std::size_t>(sectors));
    gains[0] = std::pow(10.0, uniform(0.0, 2.0));
    for (int j = 1; j < sectors; ++j) gains[j] = std::pow(10.0, uniform(-3.0, 1.0));
    std::vector<int> nbrs;
    for (int j = 1; j < sectors; ++j) {
      if (u01(rng) < 0.7) nbrs.push_back(j);
    }
    if (nbrs.empty()) nbrs.push_back(1);
    std::vector<double> blank(static_cast<std::size_t>(sectors), 0.0);
    int blanked = 0;
    for (int j : nbrs) {
      if (u01(rng) < 0.5) {
        blank[j] = 1.0;
        ++blanked;
      }
    }
    const double exact = link::SinrExact(gains, 0, blank, radio);
    const double bound = link::SinrBound(gains, 0, blank, nbrs, radio);
    // Dominant blanked neighbor and the rest of the blanked set.
    int star = -1;
    for (int j : nbrs) {
      if (blank[j] == 1.0 && (star < 0 || gains[j] > gains[star])) star = j;
    }
    double others = 0.0;
    double interference = 0.0;
    for (int j = 1; j < sectors; ++j) {
      if (blank[j] == 1.0 && j != star) others += gains[j];
      interference += (1.0 - blank[j]) * gains[j];
    }
    const double factor =
        1.0 + radio.tx_power_per_rb_w * others /
                  (radio.tx_power_per_rb_w * interference + radio.noise_per_rb_w);
    const double rel = std::abs(exact - bound * factor) / exact;
    rep.max_relative_error = std::max(rep.max_relative_error, rel);
    ++rep.samples;
    if (rel > 1e-9) ++rep.identity_violations;
    if (bound > exact) ++rep.bound_violations;
    if (blanked <= 1 && bound != exact) ++rep.exactness_violations;
  }
  return rep;
}

RelaxedLpSolution SolveRelaxedLp(const link::RateTriples& t,
                                 const std::vector<std::vector<double>>& weights,
                                 const net::NeighborMap& neighbors, int n) {
  const int sectors = t.sectors();
  lp::LinearProgram prog;
  std::vector<int> first_x(static_cast<std::size_t>(sectors));
  std::vector<int> first_y(static_cast<std::size_t>(sectors));
  std::vector<int> blank_var(static_cast<std::size_t>(sectors));
  for (int k = 0; k < sectors; ++k) {
    first_x[k] = prog.num_vars();
    for (int m = 0; m < t.users(k); ++m) {
      prog.AddVar(weights[k][m] * t.base(k, m, n));
    }
    first_y[k] = prog.num_vars();
    for (int m = 0; m < t.users(k); ++m) {
      for (int i = 0; i < t.degree(k); ++i) {
        prog.AddVar(weights[k][m] * t.extra(k, m, n, i));
      }
    }
  }
  for (int k = 0; k < sectors; ++k) blank_var[k] = prog.AddVar(0.0);
  for (int k = 0; k < sectors; ++k) {
    const int users = t.users(k);
    const int degree = t.degree(k);
    std::vector<std::pair<int, double>> row;
    for (int m = 0; m < users; ++m) row.push_back({first_x[k] + m, 1.0});
    row.push_back({blank_var[k], 1.0});
    prog.AddRow(row, lp::Sense::kEq, 1.0);
    for (int m = 0; m < users; ++m) {
      row.clear();
      for (int i = 0; i < degree; ++i) row.push_back({first_y[k] + m * degree + i, 1.0});
      row.push_back({first_x[k] + m, -1.0});
      prog.AddRow(row, lp::Sense::kLe, 0.0);
    }
    const auto list = neighbors.of(k);
    for (int i = 0; i < degree; ++i) {
      row.clear();
      for (int m = 0; m < users; ++m) row.push_back({first_y[k] + m * degree + i, 1.0});
      row.push_back({blank_var[list[i]], -1.0});
      prog.AddRow(row, lp::Sense::kLe, 0.0);
    }
  }
  const lp::LpResult res = lp::Solve(prog);
  if (res.status != lp::LpResult::Status::kOptimal) {
    throw Error("relaxed scheduling LP did not solve to optimality");
  }
  RelaxedLpSolution out;
  out.value = res.objective;
  out.variables = prog.num_vars();
  for (double v : res.x) {
    if (std::abs(v) < kBinaryTol || std::abs(1.0 - v) < kBinaryTol) ++out.binary;
  }
  out.blanking = core::BlankingMatrix(sectors, 1);
  for (int k = 0; k < sectors; ++k) out.blanking(k, 0) = res.x[blank_var[k]];
  return out;
}

double SolveSubproblemLp(const core::SubproblemInput& in) {
  const link::RateTriples& t = *in.triples;
  const int users = t.users(in.k);
  const int degree = t.degree(in.k);
  lp::LinearProgram prog;
  for (int m = 0; m < users; ++m) {
    prog.AddVar(in.weights[m] * t.base(in.k, m, in.n));
  }
  for (int m = 0; m < users; ++m) {
    for (int i = 0; i < degree; ++i) {
      prog.AddVar(in.weights[m] * t.extra(in.k, m, in.n, i));
    }
  }
  std::vector<std::pair<int, double>> row;
  for (int m = 0; m < users; ++m) row.push_back({m, 1.0});
  prog.AddRow(row, lp::Sense::kEq, 1.0 - in.own_blanking);
  for (int m = 0; m < users; ++m) {
    row.clear();
    for (int i = 0; i < degree; ++i) row.push_back({users + m * degree + i, 1.0});
    row.push_back({m, -1.0});
    prog.AddRow(row, lp::Sense::kLe, 0.0);
  }
  for (int i = 0; i < degree; ++i) {
    row.clear();
    for (int m = 0; m < users; ++m) row.push_back({users + m * degree + i, 1.0});
    prog.AddRow(row, lp::Sense::kLe, in.neighbor_blanking[i]);
  }
  const lp::LpResult res = lp::Solve(prog);
  if (res.status != lp::LpResult::Status::kOptimal) {
    throw Error("subproblem LP did not solve to optimality");
  }
  return res.objective;
}

}  // namespace icic::oracle
