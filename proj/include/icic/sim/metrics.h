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


// Throughput statistics collected by the system-level simulation.

#ifndef ICIC_SIM_METRICS_H_
#define ICIC_SIM_METRICS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "icic/core/certify.h"

namespace icic::sim {

struct UserRecord {
  int drop = 0;
  int sector = 0;
  int user = 0;
  double throughput = 0.0;  // bit/s/Hz
};

struct SectorRecord {
  int drop = 0;
  int sector = 0;
  double throughput = 0.0;  // sum over the sector's users, bit/s/Hz
};

struct GapRecord {
  int subframe = 0;  // drop * subframes + t
  std::string rb_set;
  core::GapReport gap;
};

struct OverheadRecord {
  std::string scheme;
  core::OverheadInput input;
  core::OverheadReport report;
  double measured_bps = 0.0;  // per sector, from the exchanged values
};

struct TradeoffPoint {
  std::string scheme;
  double alpha = 0.0;
  std::vector<double> percentiles;
  double aggregate = 0.0;
};

struct MetricsReport {
  std::string scheme;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> drop_seeds;
  std::uint64_t config_hash = 0;

  std::vector<UserRecord> users;
  std::vector<SectorRecord> sectors;
  std::vector<double> percentile_levels;
  std::vector<double> percentiles;
  double aggregate = 0.0;  // mean sector throughput
  std::vector<double> rmin;
  std::vector<double> outage;
  std::vector<int> blanked_counts;  // per (drop, sector), rounded
  std::vector<double> blanked_pmf;  // index = blanked RBs
  std::vector<GapRecord> gaps;
  std::vector<OverheadRecord> overhead;
  std::vector<TradeoffPoint> tradeoff;
};

// Linear interpolation between order statistics of `sorted`.
double Percentile(const std::vector<double>& sorted, double level);

// Empirical CDF of the pooled samples: (value, i / n) for sorted values.
std::vector<std::pair<double, double>> EmpiricalCdf(std::vector<double> values);

// Share of samples strictly below `rmin`.
double OutageProbability(const std::vector<double>& values, double rmin);

// PMF over 0..rbs of the given counts; empty when there are none.
std::vector<double> BlankedPmf(const std::vector<int>& counts, int rbs);

// Derives the summary statistics from the raw records.
void FinalizeMetrics(MetricsReport& report, int rbs);

std::vector<double> Throughputs(const MetricsReport& report);

}  // namespace icic::sim

#endif  // ICIC_SIM_METRICS_H_
