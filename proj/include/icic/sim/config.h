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

// Simulation configuration: a line-oriented `section.key = value` file.

#ifndef ICIC_SIM_CONFIG_H_
#define ICIC_SIM_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "icic/core/algorithm.h"
#include "icic/fair_sched.h"
#include "icic/net_model.h"

namespace icic::sim {

enum class Scheme { kProposed, kReuse1, kReuse3, kPfr };

std::string SchemeName(Scheme s);
Scheme ParseScheme(const std::string& name);

enum class NeighborMode { kGeometric, kStrongest };
enum class InitMode { kZero, kRandom, kWarm };

struct ScenarioConfig {
  int sites = 4;
  int users_per_sector = 4;
  int rbs = 10;
  double isd_m = 500.0;
  double tilt_deg = 12.0;
  bool wraparound = true;
  NeighborMode neighbors = NeighborMode::kGeometric;
  int neighbor_count = 6;
  std::uint64_t seed = 1;
  int drops = 2;
  int subframes = 200;
  double window = 100.0;  // t_c
  int threads = 1;        // drops simulated concurrently
};

struct RadioSection {
  double bs_power_dbm = 46.0;
  double noise_dbm_per_rb = -114.45;
  double bandwidth_hz = 10e6;
  double sinr_margin_db = 0.0;
  std::string amc_table;  // CSV path; empty selects the built-in table
};

struct SimConfig {
  ScenarioConfig scenario;
  RadioSection radio;
  net::ChannelConfig channel;
  int estimation_delay = 0;  // sub-frames
  sched::WeightPolicy weights;
  Scheme scheme = Scheme::kProposed;
  core::IcicConfig icic;
  InitMode init = InitMode::kWarm;
  double pfr_inner_fraction = 0.6;
  std::vector<double> rmin{0.0, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07};
  std::vector<double> percentiles{5.0, 50.0, 95.0};
  std::vector<double> tradeoff_alphas;

  void Validate() const;
  // Canonical `section.key = value` text, one field per line. Thread
  // counts do not change results and are left out unless requested.
  std::string Canonical(bool with_threads = false) const;
};

// Throws ConfigError naming the offending line.
SimConfig ParseConfig(std::istream& in, const std::string& source = "config");
SimConfig LoadConfig(const std::string& path);

// 64-bit FNV-1a.
std::uint64_t Fnv1a(const std::string& text);

}  // namespace icic::sim

#endif  // ICIC_SIM_CONFIG_H_
