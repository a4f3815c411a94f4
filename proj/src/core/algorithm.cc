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

#include "icic/core/algorithm.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "icic/core/master.h"
#include "icic/core/subproblem.h"
#include "icic/errors.h"

namespace icic::core {
namespace {

constexpr double kBinaryTol = 1e-6;

template <typename Fn>
void ParallelFor(int count, int threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = std::min(threads, count);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < count; i += workers) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool IsBinary(double v) {
  return std::abs(v) < kBinaryTol || std::abs(1.0 - v) < kBinaryTol;
}

// Largest weighted rate any user can reach; weights are divided by it.
double WeightScale(const link::RateTriples& t,
                   const std::vector<std::vector<double>>& weights) {
  double top = 0.0;
  for (int k = 0; k < t.sectors(); ++k) {
    for (int m = 0; m < t.users(k); ++m) {
      for (int n = 0; n < t.rbs(); ++n) {
        double r = t.base(k, m, n);
        for (int i = 0; i < t.degree(k); ++i) r = std::max(r, t.boosted(k, m, n, i));
        top = std::max(top, weights[k][m] * r);
      }
    }
  }
  return top > 0.0 ? 1.0 / top : 1.0;
}

std::vector<std::vector<double>> Scaled(
    const std::vector<std::vector<double>>& weights, double scale) {
  auto out = weights;
  for (auto& row : out) {
    for (double& w : row) w *= scale;
  }
  return out;
}

struct Evaluation {
  double value = 0.0;
  BlankingMatrix own_dual;
  // neighbor_dual[k][i][n]: lambda^(k, j_i) on RB n.
  std::vector<std::vector<std::vector<double>>> neighbor_dual;
  std::vector<double> sector_value;
  long binary = 0;
  long variables = 0;
};

// Solves every subproblem at `own` with neighbor values taken from
// view[k][i][n].
Evaluation SolveAll(const link::RateTriples& t,
                    const std::vector<std::vector<double>>& weights,
                    const net::NeighborMap& neighbors,
                    const BlankingMatrix& own,
                    const std::vector<std::vector<std::vector<double>>>& view,
                    int threads, bool count_binary) {
  const int sectors = t.sectors();
  const int rbs = t.rbs();
  Evaluation ev;
  ev.own_dual = BlankingMatrix(sectors, rbs);
  ev.neighbor_dual.resize(static_cast<std::size_t>(sectors));
  ev.sector_value.assign(static_cast<std::size_t>(sectors), 0.0);
  std::vector<long> bin(static_cast<std::size_t>(sectors), 0);
  std::vector<long> vars(static_cast<std::size_t>(sectors), 0);
  ParallelFor(sectors, threads, [&](int k) {
    const int degree = neighbors.degree(k);
    auto& out = ev.neighbor_dual[k];
    out.assign(static_cast<std::size_t>(degree),
               std::vector<double>(static_cast<std::size_t>(rbs), 0.0));
    std::vector<double> nb(static_cast<std::size_t>(degree));
    double total = 0.0;
    for (int n = 0; n < rbs; ++n) {
      for (int i = 0; i < degree; ++i) nb[i] = view[k][i][n];
      SubproblemInput in;
      in.k = k;
      in.n = n;
      in.own_blanking = own(k, n);
      in.neighbor_blanking = nb;
      in.weights = weights[k];
      in.triples = &t;
      const SubproblemSolution s = SolveSubproblem(in);
      total += s.value;
      ev.own_dual(k, n) = s.own_dual;
      for (int i = 0; i < degree; ++i) out[i][n] = s.neighbor_dual[i];
      if (count_binary) {
        for (double v : s.x) bin[k] += IsBinary(v);
        for (double v : s.y) bin[k] += IsBinary(v);
        bin[k] += IsBinary(own(k, n));
        vars[k] += static_cast<long>(s.x.size() + s.y.size()) + 1;
      }
    }
    ev.sector_value[k] = total;
  });
  for (int k = 0; k < sectors; ++k) {
    ev.value += ev.sector_value[k];
    ev.binary += bin[k];
    ev.variables += vars[k];
  }
  return ev;
}

std::vector<std::vector<std::vector<double>>> ExactView(
    const net::NeighborMap& neighbors, const BlankingMatrix& blanking) {
  std::vector<std::vector<std::vector<double>>> view(
      static_cast<std::size_t>(blanking.sectors()));
  for (int k = 0; k < blanking.sectors(); ++k) {
    for (int j : neighbors.of(k)) {
      const auto row = blanking.row(j);
      view[k].emplace_back(row.begin(), row.end());
    }
  }
  return view;
}

// Subgradient assembled directly from the duals, without messages.
BlankingMatrix DirectSubgradient(const net::NeighborMap& neighbors,
                                 const Evaluation& ev) {
  BlankingMatrix g(ev.own_dual.sectors(), ev.own_dual.rbs());
  for (int k = 0; k < g.sectors(); ++k) {
    const auto list = neighbors.of(k);
    for (int n = 0; n < g.rbs(); ++n) {
      double v = -ev.own_dual(k, n);
      for (int j : list) {
        v += ev.neighbor_dual[j][neighbors.IndexOf(j, k)][n];
      }
      g(k, n) = v;
    }
  }
  return g;
}

// max over I' in the box of <Lambda, I' - I>, frozen entries excluded.
double BoxAscent(const BlankingMatrix& blanking, const BlankingMatrix& grad,
                 const BlankingMatrix* frozen) {
  double s = 0.0;
  const auto v = blanking.values();
  const auto g = grad.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (frozen != nullptr && frozen->values()[i] != 0.0) continue;
    s += std::max(g[i] * (1.0 - v[i]), -g[i] * v[i]);
  }
  return s;
}

struct RunOutput {
  BlankingMatrix relaxed;
  double best_value = 0.0;
  double best_upper = 0.0;
  long binary = 0;
  long variables = 0;
};

RunOutput RunMaster(const link::RateTriples& t,
                    const std::vector<std::vector<double>>& weights,
                    const net::NeighborMap& neighbors,
                    const IcicConfig& cfg, BlankingMatrix blanking,
                    const BlankingMatrix* frozen, int run, double scale,
                    Mailbox& mailbox, std::vector<IterationRecord>& trace) {
  const int sectors = t.sectors();
  auto publish = [&](double v) {
    return cfg.quantize_exchange ? Quantize(v, cfg.quant_bits) : v;
  };
  auto view = ExactView(neighbors, blanking);
  if (cfg.quantize_exchange) {
    for (auto& rows : view) {
      for (auto& row : rows) {
        for (double& v : row) v = publish(v);
      }
    }
  }
  RunOutput out;
  out.best_value = -1.0;
  out.best_upper = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::vector<double>>> incoming(
      static_cast<std::size_t>(sectors));
  for (int p = 1; p <= cfg.iterations; ++p) {
    const Evaluation ev =
        SolveAll(t, weights, neighbors, blanking, view, cfg.threads, false);
    // Each sector sends lambda^(k, j) to neighbor j.
    ParallelFor(sectors, cfg.threads, [&](int k) {
      const auto list = neighbors.of(k);
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::vector<double> msg = ev.neighbor_dual[k][i];
        for (double& v : msg) v = publish(v);
        mailbox.Post(list[i], k, std::move(msg));
      }
    });
    ParallelFor(sectors, cfg.threads, [&](int k) {
      incoming[k] = mailbox.Collect(k, neighbors.of(k));
    });
    const BlankingMatrix grad = ComputeSubgradient(ev.own_dual, incoming);
    IterationRecord rec;
    rec.run = run;
    rec.iteration = p;
    rec.value = ev.value / scale;
    const double upper = ev.value + BoxAscent(blanking, grad, frozen);
    rec.upper_bound = upper / scale;
    out.best_value = std::max(out.best_value, ev.value);
    out.best_upper = std::min(out.best_upper, upper);

    MasterStep(blanking, grad, p, cfg.step, frozen);
    // Each sector sends its updated I^(k) row to its neighbors.
    ParallelFor(sectors, cfg.threads, [&](int k) {
      const auto row = blanking.row(k);
      for (int j : neighbors.of(k)) {
        std::vector<double> msg(row.begin(), row.end());
        for (double& v : msg) v = publish(v);
        mailbox.Post(j, k, std::move(msg));
      }
    });
    ParallelFor(sectors, cfg.threads, [&](int k) {
      view[k] = mailbox.Collect(k, neighbors.of(k));
    });
    rec.rounded_value =
        BoundObjective(t, weights, neighbors, RoundBlanking(blanking)) / scale;
    trace.push_back(rec);
  }
  if (cfg.certify) {
    const Evaluation ev = SolveAll(t, weights, neighbors, blanking,
                                   ExactView(neighbors, blanking), cfg.threads,
                                   true);
    const BlankingMatrix grad = DirectSubgradient(neighbors, ev);
    out.best_value = std::max(out.best_value, ev.value);
    out.best_upper =
        std::min(out.best_upper, ev.value + BoxAscent(blanking, grad, frozen));
    out.binary = ev.binary;
    out.variables = ev.variables;
  }
  out.relaxed = std::move(blanking);
  return out;
}

}  // namespace

void IcicConfig::Validate() const {
  if (iterations < 1) throw ConfigError("icic.iterations must be >= 1");
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ConfigError("icic.step must be positive");
  }
  if (period < 1) throw ConfigError("icic.period must be >= 1");
  if (runs != 1 && runs != 2) throw ConfigError("icic.runs must be 1 or 2");
  if (quant_bits < 1 || quant_bits > 52) {
    throw ConfigError("icic.quant_bits must be in [1, 52]");
  }
  if (quantize_exchange && !normalize_weights) {
    throw ConfigError(
        "icic.quantize_exchange requires icic.normalize_weights");
  }
  if (threads < 1) throw ConfigError("icic.threads must be >= 1");
}

BlankingMatrix InitialBlanking(int sectors, int rbs,
                               std::optional<std::uint64_t> random_seed) {
  BlankingMatrix b(sectors, rbs);
  if (random_seed) {
    std::mt19937_64 rng(*random_seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : b.values()) v = u(rng);
  }
  return b;
}

ScheduleResult FinalizeSchedule(const BlankingMatrix& blanking,
                                const net::ChannelTensor& channel,
                                const std::vector<std::vector<double>>& weights,
                                const net::RadioConfig& radio,
                                const link::LinkAdaptation& link) {
  const int sectors = channel.sectors();
  const int rbs = channel.rbs();
  ScheduleResult out;
  out.assignment.resize(static_cast<std::size_t>(sectors));
  out.rates.resize(static_cast<std::size_t>(sectors));
  out.user_rate.resize(static_cast<std::size_t>(sectors));
  std::vector<double> column(static_cast<std::size_t>(sectors));
  for (int k = 0; k < sectors; ++k) {
    const int users = channel.users(k);
    auto& rates = out.rates[k];
    rates.assign(static_cast<std::size_t>(users) * rbs, 0.0);
    for (int n = 0; n < rbs; ++n) {
      if (blanking(k, n) != 0.0) continue;
      for (int j = 0; j < sectors; ++j) column[j] = blanking(j, n);
      for (int m = 0; m < users; ++m) {
        rates[static_cast<std::size_t>(m) * rbs + n] = link.Rate(
            link::SinrExact(channel.gains(k, m, n), k, column, radio));
      }
    }
    out.assignment[k] =
        sched::LocalSchedule(weights[k], rates, rbs, blanking.row(k));
    out.user_rate[k].assign(static_cast<std::size_t>(users), 0.0);
    for (int n = 0; n < rbs; ++n) {
      const int m = out.assignment[k].owner[n];
      if (m >= 0) out.user_rate[k][m] += rates[static_cast<std::size_t>(m) * rbs + n];
    }
    for (int m = 0; m < users; ++m) {
      out.objective += weights[k][m] * out.user_rate[k][m];
    }
  }
  return out;
}

MasterValue EvaluateMaster(const link::RateTriples& triples,
                           const std::vector<std::vector<double>>& weights,
                           const net::NeighborMap& neighbors,
                           const BlankingMatrix& blanking, int threads) {
  const Evaluation ev = SolveAll(triples, weights, neighbors, blanking,
                                 ExactView(neighbors, blanking), threads,
                                 false);
  return {ev.value, DirectSubgradient(neighbors, ev)};
}

AlgorithmResult RunIcic(const IcicProblem& problem,
                              const IcicConfig& cfg,
                              const BlankingMatrix& initial) {
  cfg.Validate();
  const net::ChannelTensor& channel = *problem.channel;
  const net::NeighborMap& neighbors = *problem.neighbors;
  const auto& weights = *problem.weights;
  const int sectors = channel.sectors();
  const int rbs = channel.rbs();
  if (initial.sectors() != sectors || initial.rbs() != rbs) {
    throw ConfigError("initial blanking has the wrong shape");
  }
  link::RateTriples owned;
  const link::RateTriples* t1 = problem.triples;
  if (t1 == nullptr) {
    owned = link::PrecomputeRateTriples(channel, *problem.radio, neighbors,
                                        *problem.link);
    t1 = &owned;
  }

  AlgorithmResult res;
  if (cfg.force_no_blanking) {
    res.relaxed = BlankingMatrix(sectors, rbs);
    res.blanking = res.relaxed;
    res.bound_objective =
        BoundObjective(*t1, weights, neighbors, res.blanking);
    res.schedule = FinalizeSchedule(res.blanking, channel, weights,
                                    *problem.radio, *problem.link);
    return res;
  }

  const double scale = cfg.normalize_weights ? WeightScale(*t1, weights) : 1.0;
  const auto w = Scaled(weights, scale);
  Mailbox mailbox(sectors);
  BlankingMatrix start = initial;
  for (double& v : start.values()) v = std::clamp(v, 0.0, 1.0);

  RunOutput run = RunMaster(*t1, w, neighbors, cfg, start, nullptr, 1, scale,
                            mailbox, res.trace);
  BlankingMatrix rounded = RoundBlanking(run.relaxed);
  const link::RateTriples* t_final = t1;
  link::RateTriples t2;
  if (cfg.runs == 2) {
    // Sectors blanked by the first run no longer interfere on those RBs.
    net::ChannelTensor silenced = channel;
    for (int n = 0; n < rbs; ++n) {
      for (int k = 0; k < sectors; ++k) {
        if (rounded(k, n) != 1.0) continue;
        for (int j = 0; j < sectors; ++j) {
          if (j == k) continue;
          for (int m = 0; m < silenced.users(j); ++m) silenced.gain(j, m, n, k) = 0.0;
        }
      }
    }
    t2 = link::PrecomputeRateTriples(silenced, *problem.radio, neighbors,
                                     *problem.link);
    const BlankingMatrix frozen = rounded;
    BlankingMatrix start2 = run.relaxed;
    for (std::size_t i = 0; i < start2.values().size(); ++i) {
      if (frozen.values()[i] != 0.0) start2.values()[i] = 1.0;
    }
    run = RunMaster(t2, w, neighbors, cfg, start2, &frozen, 2, scale, mailbox,
                    res.trace);
    rounded = RoundBlanking(run.relaxed);
    t_final = &t2;
  }

  res.relaxed = run.relaxed;
  res.blanking = rounded;
  const double p_hat = BoundObjective(*t_final, w, neighbors, rounded);
  res.bound_objective = BoundObjective(*t1, weights, neighbors, rounded);
  GapReport& g = res.gap;
  g.p_hat = p_hat / scale;
  g.p_relaxed = std::max(run.best_value, p_hat) / scale;
  g.upper_bound = std::max(run.best_upper, p_hat) / scale;
  if (g.p_relaxed > 0.0) g.gap_percent = OptimalityGap(g.p_relaxed, g.p_hat);
  if (g.upper_bound > 0.0) {
    g.certified_gap_percent = OptimalityGap(g.upper_bound, g.p_hat);
  }
  if (run.variables > 0) {
    g.binary_fraction =
        static_cast<double>(run.binary) / static_cast<double>(run.variables);
  }
  double users = 0.0;
  for (int k = 0; k < sectors; ++k) users += channel.users(k);
  g.binary_bound_percent =
      BinaryFractionBound(users / sectors, neighbors.mean_degree());
  res.schedule = FinalizeSchedule(rounded, channel, weights, *problem.radio,
                                  *problem.link);
  res.messages = mailbox.messages();
  res.values_exchanged = mailbox.values();
  return res;
}

}  // namespace icic::core
