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

// The distributed ICIC algorithm end to end: per-sector subproblems, the
// projected-subgradient master with simulated message exchange, rounding,
// the optional second run and the final local scheduling.

#ifndef ICIC_CORE_ALGORITHM_H_
#define ICIC_CORE_ALGORITHM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "icic/core/blanking.h"
#include "icic/core/certify.h"
#include "icic/fair_sched.h"
#include "icic/link_adapt.h"
#include "icic/net_model.h"

namespace icic::core {

struct IcicConfig {
  int iterations = 5;  // N_iter
  double step = 1.0;   // c; delta = c / p
  int period = 1;      // rho, sub-frames between executions
  int runs = 1;        // 2 re-runs with the first run's blanking frozen
  int quant_bits = 8;  // L_q
  // Scales weights so the largest weighted rate is 1; equivalent to a
  // per-instance choice of c.
  bool normalize_weights = true;
  // Exchanged I and lambda values are rounded to quant_bits.
  bool quantize_exchange = false;
  // Extra subproblem solves at the final iterate for the gap report.
  bool certify = true;
  // Skip the master entirely; the result is the reuse-1 schedule.
  bool force_no_blanking = false;
  int threads = 1;

  void Validate() const;
};

// Starting point of the first run: zeros, or uniform draws from `seed`.
BlankingMatrix InitialBlanking(int sectors, int rbs,
                               std::optional<std::uint64_t> random_seed);

struct IcicProblem {
  const net::ChannelTensor* channel = nullptr;
  const net::RadioConfig* radio = nullptr;
  const net::NeighborMap* neighbors = nullptr;
  const link::LinkAdaptation* link = nullptr;
  // weights[k][m], unnormalized.
  const std::vector<std::vector<double>>* weights = nullptr;
  // Precomputed from `channel`; computed on demand when null.
  const link::RateTriples* triples = nullptr;
};

// One master iteration p of run r, all values in original weight units.
struct IterationRecord {
  int run = 0;
  int iteration = 0;
  double value = 0.0;          // Phi at the iterate solved in this step
  double upper_bound = 0.0;    // Phi + max over the box of <Lambda, I' - I>
  double rounded_value = 0.0;  // bound objective of round(I) after the step
};

struct ScheduleResult {
  std::vector<sched::Assignment> assignment;  // per sector
  // rates[k][m * N + n]: exact rate under the final blanking.
  std::vector<std::vector<double>> rates;
  // Per-user scheduled rate this sub-frame.
  std::vector<std::vector<double>> user_rate;
  double objective = 0.0;  // sum_k sum_m w_m user_rate
};

struct AlgorithmResult {
  BlankingMatrix relaxed;   // last fractional iterate, for warm starts
  BlankingMatrix blanking;  // rounded I*
  ScheduleResult schedule;
  GapReport gap;
  // Bound objective of I* under the input rate triples. The gap report
  // uses the triples of the last run instead.
  double bound_objective = 0.0;
  std::vector<IterationRecord> trace;
  std::uint64_t messages = 0;
  std::uint64_t values_exchanged = 0;
};

// Exact-rate scheduling for binary blanking.
ScheduleResult FinalizeSchedule(const BlankingMatrix& blanking,
                                const net::ChannelTensor& channel,
                                const std::vector<std::vector<double>>& weights,
                                const net::RadioConfig& radio,
                                const link::LinkAdaptation& link);

// Phi(I) = sum of subproblem values and its subgradient.
struct MasterValue {
  double value = 0.0;
  BlankingMatrix subgradient;
};
MasterValue EvaluateMaster(const link::RateTriples& triples,
                           const std::vector<std::vector<double>>& weights,
                           const net::NeighborMap& neighbors,
                           const BlankingMatrix& blanking, int threads = 1);

AlgorithmResult RunIcic(const IcicProblem& problem,
                              const IcicConfig& config,
                              const BlankingMatrix& initial);

}  // namespace icic::core

#endif  // ICIC_CORE_ALGORITHM_H_
