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

// Optimality-gap certificates and message-exchange overhead accounting.

#ifndef ICIC_CORE_CERTIFY_H_
#define ICIC_CORE_CERTIFY_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "icic/core/blanking.h"
#include "icic/link_adapt.h"
#include "icic/net_model.h"

namespace icic::core {

// (p_relaxed - p_hat) / p_relaxed * 100. Throws ConfigError when
// p_relaxed <= 0.
double OptimalityGap(double p_relaxed, double p_hat);

// Lower bound, in percent, on the share of LP variables at 0 or 1 in any
// vertex of the relaxed problem: K~(M-1) / ((K~+1)M + 1) * 100.
double BinaryFractionBound(double mean_users, double degree);

struct GapReport {
  double p_relaxed = 0.0;       // best relaxed value seen (estimate)
  double p_hat = 0.0;           // bound objective of the rounded solution
  double gap_percent = 0.0;     // OptimalityGap(p_relaxed, p_hat)
  double upper_bound = 0.0;     // certified relaxed upper bound
  double certified_gap_percent = 0.0;
  double binary_fraction = 0.0;  // share of relaxed variables in {0, 1}
  double binary_bound_percent = 0.0;
};

// Header `subframe,rb_set,p_relaxed,p_hat,gap_pct,binary_frac,binary_frac_bound`.
void WriteGapHeader(std::ostream& out);
void WriteGapRow(std::ostream& out, int subframe, const std::string& rb_set,
                 const GapReport& report);

struct OverheadInput {
  int rbs = 0;                 // N
  double users = 0.0;          // M^(k), mean over sectors
  double degree = 0.0;         // K~, mean over sectors
  int iterations = 0;          // total master iterations per execution
  int period = 1;              // rho, sub-frames
  int quant_bits = 8;          // L_q
  double subframe_s = 1e-3;
};

struct OverheadReport {
  double distributed_bps = 0.0;
  double centralized_bps = 0.0;
  double ratio = 0.0;  // centralized / distributed
};

OverheadReport ComputeOverhead(const OverheadInput& in);

// Header `scheme,rbs,users,degree,iterations,period,quant_bits,
// distributed_bps,centralized_bps,ratio,measured_values`.
void WriteOverheadHeader(std::ostream& out);
void WriteOverheadRow(std::ostream& out, const std::string& scheme,
                      const OverheadInput& in, const OverheadReport& report,
                      double measured_values);

// Objective of the bound problem for binary blanking:
// sum_k sum_n (1 - I^(k)_n) max_m w_m (r + max_i I^(j_i)_n r~_i).
double BoundObjective(const link::RateTriples& triples,
                      const std::vector<std::vector<double>>& weights,
                      const net::NeighborMap& neighbors,
                      const BlankingMatrix& blanking);

// Same restricted to RB n.
double BoundObjectiveRb(const link::RateTriples& triples,
                        const std::vector<std::vector<double>>& weights,
                        const net::NeighborMap& neighbors,
                        const BlankingMatrix& blanking, int n);

}  // namespace icic::core

#endif  // ICIC_CORE_CERTIFY_H_
