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


#include "icic/sim/simulation.h"

#include <cmath>
#include <deque>
#include <exception>
#include <fstream>
#include <optional>
#include <thread>

#include "icic/core/algorithm.h"
#include "icic/errors.h"
#include "icic/fair_sched.h"
#include "icic/net_model.h"
#include "icic/sim/baselines.h"

namespace icic::sim {
namespace {

struct Shared {
  const SimConfig* cfg = nullptr;
  net::NetworkDims dims;
  net::Layout layout;
  net::RadioConfig radio;
  link::LinkAdaptation link;      // used for scheduling decisions
  link::LinkAdaptation capacity;  // realized channel capacity, no margin
};

struct DropResult {
  std::vector<UserRecord> users;
  std::vector<SectorRecord> sectors;
  std::vector<int> blanked_counts;
  std::vector<GapRecord> gaps;
  double exchanged_values = 0.0;
  int executions = 0;
  double mean_degree = 0.0;
};

std::string RbSet(int rbs) { return "0-" + std::to_string(rbs - 1); }

DropResult SimulateDrop(const Shared& sh, int drop, std::uint64_t seed) {
  const SimConfig& cfg = *sh.cfg;
  const int sectors = sh.dims.sectors;
  const int rbs = sh.dims.rbs;
  const int subframes = cfg.scenario.subframes;
  net::ChannelModel model(sh.layout, sh.dims, sh.radio, cfg.channel, seed);
  const net::NeighborMap neighbors =
      cfg.scenario.neighbors == NeighborMode::kGeometric
          ? net::GeometricNeighbors(sh.layout)
          : net::StrongestInterferers(model.MeanCoupling(),
                                      cfg.scenario.neighbor_count);

  std::vector<sched::AverageRateTracker> trackers;
  for (int k = 0; k < sectors; ++k) {
    trackers.emplace_back(sh.dims.users[k], cfg.scenario.window);
  }
  std::vector<std::vector<double>> served(static_cast<std::size_t>(sectors));
  for (int k = 0; k < sectors; ++k) served[k].assign(sh.dims.users[k], 0.0);
  std::vector<double> blanked(static_cast<std::size_t>(sectors), 0.0);

  core::BlankingMatrix blanking(sectors, rbs);
  if (cfg.scheme != Scheme::kProposed) {
    blanking = BaselineBlanking(cfg.scheme, sectors, rbs,
                                cfg.pfr_inner_fraction);
  }
  std::optional<core::BlankingMatrix> warm;
  std::deque<net::ChannelTensor> history;
  DropResult out;
  out.mean_degree = neighbors.mean_degree();
  std::vector<double> column(static_cast<std::size_t>(sectors));

  for (int t = 0; t < subframes; ++t) {
    history.push_back(model.NextSubframe());
    if (static_cast<int>(history.size()) > cfg.estimation_delay + 1) {
      history.pop_front();
    }
    const net::ChannelTensor& actual = history.back();
    const net::ChannelTensor& estimate = history.front();

    std::vector<std::vector<double>> weights;
    weights.reserve(sectors);
    for (int k = 0; k < sectors; ++k) {
      weights.push_back(sched::ComputeWeights(cfg.weights, trackers[k]));
    }

    core::ScheduleResult schedule;
    if (cfg.scheme == Scheme::kProposed && t % cfg.icic.period == 0) {
      core::BlankingMatrix initial(sectors, rbs);
      if (cfg.init == InitMode::kWarm && warm) {
        initial = *warm;
      } else if (cfg.init == InitMode::kRandom) {
        initial = core::InitialBlanking(
            sectors, rbs, net::DeriveSeed(seed, static_cast<std::uint64_t>(t) + 1));
      }
      core::IcicProblem problem;
      problem.channel = &estimate;
      problem.radio = &sh.radio;
      problem.neighbors = &neighbors;
      problem.link = &sh.link;
      problem.weights = &weights;
      core::AlgorithmResult res = core::RunIcic(problem, cfg.icic, initial);
      warm = res.relaxed;
      blanking = res.blanking;
      schedule = std::move(res.schedule);
      out.gaps.push_back({drop * subframes + t, RbSet(rbs), res.gap});
      out.exchanged_values += static_cast<double>(res.values_exchanged);
      ++out.executions;
    } else {
      schedule = core::FinalizeSchedule(blanking, estimate, weights, sh.radio,
                                        sh.link);
    }

    for (int k = 0; k < sectors; ++k) {
      std::vector<double> realized(static_cast<std::size_t>(sh.dims.users[k]), 0.0);
      for (int n = 0; n < rbs; ++n) {
        if (blanking(k, n) != 0.0) {
          blanked[k] += 1.0;
          continue;
        }
        const int m = schedule.assignment[k].owner[n];
        if (m < 0) continue;
        const double planned =
            schedule.rates[k][static_cast<std::size_t>(m) * rbs + n];
        double rate = planned;
        if (cfg.estimation_delay > 0) {
          for (int j = 0; j < sectors; ++j) column[j] = blanking(j, n);
          const double cap = sh.capacity.Rate(
              link::SinrExact(actual.gains(k, m, n), k, column, sh.radio));
          if (planned > cap) rate = 0.0;
        }
        realized[m] += rate;
      }
      trackers[k].Update(realized);
      for (int m = 0; m < sh.dims.users[k]; ++m) served[k][m] += realized[m];
    }
  }

  // kbit/s per RB summed over RBs, averaged over sub-frames.
  const double norm = 1000.0 / (cfg.radio.bandwidth_hz * subframes);
  for (int k = 0; k < sectors; ++k) {
    double total = 0.0;
    for (int m = 0; m < sh.dims.users[k]; ++m) {
      const double thr = served[k][m] * norm;
      out.users.push_back({drop, k, m, thr});
      total += thr;
    }
    out.sectors.push_back({drop, k, total});
    out.blanked_counts.push_back(
        static_cast<int>(std::lround(blanked[k] / subframes)));
  }
  return out;
}

}  // namespace

link::LinkAdaptation MakeLinkAdaptation(const SimConfig& config) {
  link::LinkAdaptation link;
  if (!config.radio.amc_table.empty()) {
    std::ifstream in(config.radio.amc_table);
    if (!in) {
      throw ConfigError("cannot open AMC table '" + config.radio.amc_table + "'");
    }
    link.table = link::AmcTable::LoadCsv(in);
  }
  link.sinr_margin_db = config.radio.sinr_margin_db;
  return link;
}

MetricsReport RunScheme(const SimConfig& cfg) {
  cfg.Validate();
  Shared sh;
  sh.cfg = &cfg;
  sh.dims = net::NetworkDims::TriSector(cfg.scenario.sites,
                                        cfg.scenario.users_per_sector,
                                        cfg.scenario.rbs);
  sh.dims.Validate(true);
  sh.layout = net::GenerateLayout(sh.dims, cfg.scenario.isd_m,
                                  cfg.scenario.tilt_deg,
                                  cfg.scenario.wraparound);
  sh.radio = net::RadioConfig::FromTotalPower(
      cfg.radio.bs_power_dbm, cfg.scenario.rbs, cfg.radio.noise_dbm_per_rb,
      cfg.radio.bandwidth_hz);
  sh.link = MakeLinkAdaptation(cfg);
  sh.capacity = sh.link;
  sh.capacity.sinr_margin_db = 0.0;

  MetricsReport report;
  report.scheme = SchemeName(cfg.scheme);
  report.alpha = cfg.weights.alpha;
  report.seed = cfg.scenario.seed;
  report.config_hash = Fnv1a(cfg.Canonical());
  report.percentile_levels = cfg.percentiles;
  report.rmin = cfg.rmin;
  const int drops = cfg.scenario.drops;
  for (int d = 0; d < drops; ++d) {
    report.drop_seeds.push_back(
        net::DeriveSeed(cfg.scenario.seed, static_cast<std::uint64_t>(d)));
  }

  // Drops are independent; results are merged in drop order.
  std::vector<DropResult> results(static_cast<std::size_t>(drops));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(drops));
  const int workers = std::min(cfg.scenario.threads, drops);
  auto work = [&](int first) {
    for (int d = first; d < drops; d += workers) {
      try {
        results[d] = SimulateDrop(sh, d, report.drop_seeds[d]);
      } catch (...) {
        errors[d] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  double exchanged = 0.0;
  double degree = 0.0;
  int executions = 0;
  for (auto& r : results) {
    report.users.insert(report.users.end(), r.users.begin(), r.users.end());
    report.sectors.insert(report.sectors.end(), r.sectors.begin(),
                          r.sectors.end());
    report.blanked_counts.insert(report.blanked_counts.end(),
                                 r.blanked_counts.begin(),
                                 r.blanked_counts.end());
    report.gaps.insert(report.gaps.end(), r.gaps.begin(), r.gaps.end());
    exchanged += r.exchanged_values;
    executions += r.executions;
    degree += r.mean_degree;
  }
  FinalizeMetrics(report, cfg.scenario.rbs);

  if (cfg.scheme == Scheme::kProposed && executions > 0) {
    OverheadRecord o;
    o.scheme = report.scheme;
    o.input.rbs = cfg.scenario.rbs;
    o.input.users = sh.dims.MeanUsers();
    o.input.degree = degree / drops;
    o.input.iterations = cfg.icic.iterations * cfg.icic.runs;
    o.input.period = cfg.icic.period;
    o.input.quant_bits = cfg.icic.quant_bits;
    o.report = core::ComputeOverhead(o.input);
    const double window = o.input.period * o.input.subframe_s;
    o.measured_bps = exchanged / executions * cfg.icic.quant_bits / window /
                     sh.dims.sectors;
    report.overhead.push_back(o);
  }
  report.tradeoff.push_back(
      {report.scheme, report.alpha, report.percentiles, report.aggregate});
  return report;
}

MetricsReport RunSimulation(const SimConfig& cfg) {
  MetricsReport report = RunScheme(cfg);
  for (double alpha : cfg.tradeoff_alphas) {
    SimConfig sweep = cfg;
    sweep.weights = sched::WeightPolicy::AlphaFair(alpha);
    const MetricsReport r = RunScheme(sweep);
    report.tradeoff.push_back(r.tradeoff.front());
  }
  return report;
}

}  // namespace icic::sim
