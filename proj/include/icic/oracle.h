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

// Brute-force references for small instances. Exhaustive searches and dense
// LPs serve as ground truth for the flow-based solvers.

#ifndef ICIC_ORACLE_H_
#define ICIC_ORACLE_H_

#include <cstdint>
#include <vector>

#include "icic/core/blanking.h"
#include "icic/core/subproblem.h"
#include "icic/link_adapt.h"
#include "icic/net_model.h"

namespace icic::oracle {

inline constexpr int kMaxSectors = 14;
inline constexpr int kMaxSubproblemBits = 20;

struct DeskOptions {
  enum class Topology { kHex, kRing };
  int sectors = 12;
  int users = 2;
  int rbs = 2;
  Topology topology = Topology::kHex;
  int ring_degree = 2;
  // Serving SNR, dB.
  double snr_low_db = 10.0;
  double snr_high_db = 30.0;
  // Serving-to-strongest-interferer ratio, dB.
  double sir_low_db = -6.0;
  double sir_high_db = 8.0;
  // Each weaker neighbor sits at least this far below the previous one.
  double dominance_db = 20.0;
  // Non-neighbor gain relative to the serving gain.
  double far_db = -40.0;
  double weight_low = 0.5;
  double weight_high = 2.0;
};

// A small scenario with a dominant-interference channel.
struct DeskInstance {
  net::ChannelTensor channel;
  net::NeighborMap neighbors;
  net::RadioConfig radio;
  link::LinkAdaptation link;
  std::vector<std::vector<double>> weights;
  link::RateTriples triples;

  int sectors() const { return channel.sectors(); }
  int rbs() const { return channel.rbs(); }
};

DeskInstance MakeDeskInstance(const DeskOptions& options, std::uint64_t seed);

struct ExhaustiveResult {
  double value = 0.0;
  core::BlankingMatrix blanking;
  // For the bound search: the binary linear formulation evaluated at the
  // optimal blanking by subproblem enumeration.
  double linear_value = 0.0;
};

// max over binary I of sum_k (1 - I^(k)) max_m w_m f(SINR), per RB.
ExhaustiveResult ExhaustiveOriginal(const DeskInstance& inst);
// Same with the single-blanked-neighbor rate bound.
ExhaustiveResult ExhaustiveBound(const DeskInstance& inst);

struct EnumeratedSubproblem {
  double value = 0.0;
  std::vector<double> x;
  std::vector<double> y;
};

// All binary (x, y) with sum x = 1 - I^(k), sum_i y_mi <= x_m and
// sum_m y_mi <= I^(j_i). Requires binary blanking.
EnumeratedSubproblem EnumerateSubproblem(const core::SubproblemInput& in);

struct SetEquivalenceReport {
  bool equal = true;
  long contexts = 0;
  long points = 0;
  long mismatches = 0;
};

// Compares {y : y in C} and {y : y in C'} over every binary (x, I) context
// of one sector with `users` users and `degree` neighbors. With
// `single_assignment`, contexts satisfy sum_m x_m <= 1.
SetEquivalenceReport SetEquivalenceCheck(int users, int degree,
                                         bool single_assignment = true);

struct SinrBoundIdentityReport {
  long samples = 0;
  long identity_violations = 0;  // factor identity off by more than 1e-9
  long bound_violations = 0;     // bound above the exact SINR
  long exactness_violations = 0;  // <= 1 blanked neighbor yet not equal
  double max_relative_error = 0.0;
};

SinrBoundIdentityReport SinrBoundIdentityCheck(long samples, std::uint64_t seed);

struct RelaxedLpSolution {
  double value = 0.0;
  long binary = 0;
  long variables = 0;
  core::BlankingMatrix blanking;  // relaxed I, one column per solved RB
};

// Relaxation of the binary linear scheduling problem on RB n, solved as a
// dense LP. The returned point is a vertex.
RelaxedLpSolution SolveRelaxedLp(const link::RateTriples& triples,
                                 const std::vector<std::vector<double>>& weights,
                                 const net::NeighborMap& neighbors, int n);

// The subproblem LP for fixed, possibly fractional, blanking.
double SolveSubproblemLp(const core::SubproblemInput& in);

}  // namespace icic::oracle

#endif  // ICIC_ORACLE_H_
