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

#include "icic/core/certify.h"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "icic/errors.h"

namespace icic::core {

double OptimalityGap(double p_relaxed, double p_hat) {
  if (!(p_relaxed > 0.0)) {
    throw ConfigError("optimality gap undefined for non-positive relaxed value");
  }
  return (p_relaxed - p_hat) / p_relaxed * 100.0;
}

double BinaryFractionBound(double mean_users, double degree) {
  return degree * (mean_users - 1.0) / ((degree + 1.0) * mean_users + 1.0) *
         100.0;
}

void WriteGapHeader(std::ostream& out) {
  out << "subframe,rb_set,p_relaxed,p_hat,gap_pct,binary_frac,binary_frac_bound\n";
}

void WriteGapRow(std::ostream& out, int subframe, const std::string& rb_set,
                 const GapReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%s,%.10g,%.10g,%.6f,%.6f,%.6f\n",
                subframe, rb_set.c_str(), r.p_relaxed, r.p_hat, r.gap_percent,
                r.binary_fraction, r.binary_bound_percent);
  out << buf;
}

OverheadReport ComputeOverhead(const OverheadInput& in) {
  const double window = in.period * in.subframe_s;
  OverheadReport r;
  r.distributed_bps = 2.0 * in.iterations * in.degree * in.rbs *
                      in.quant_bits / window;
  r.centralized_bps =
      in.rbs * in.users * (in.degree + 1.0) * in.quant_bits / window;
  r.ratio = in.users * (in.degree + 1.0) / (2.0 * in.degree * in.iterations);
  return r;
}

void WriteOverheadHeader(std::ostream& out) {
  out << "scheme,rbs,users,degree,iterations,period,quant_bits,"
         "distributed_bps,centralized_bps,ratio,measured_values\n";
}

void WriteOverheadRow(std::ostream& out, const std::string& scheme,
                      const OverheadInput& in, const OverheadReport& r,
                      double measured_values) {
  char buf[320];
  std::snprintf(buf, sizeof buf, "%s,%d,%.6g,%.6g,%d,%d,%d,%.10g,%.10g,%.6f,%.10g\n",
                scheme.c_str(), in.rbs, in.users, in.degree, in.iterations,
                in.period, in.quant_bits, r.distributed_bps,
                r.centralized_bps, r.ratio, measured_values);
  out << buf;
}

double BoundObjectiveRb(const link::RateTriples& triples,
                        const std::vector<std::vector<double>>& weights,
                        const net::NeighborMap& neighbors,
                        const BlankingMatrix& blanking, int n) {
  double total = 0.0;
  std::vector<double> nb;
  for (int k = 0; k < triples.sectors(); ++k) {
    if (blanking(k, n) != 0.0) continue;
    const auto list = neighbors.of(k);
    nb.resize(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) nb[i] = blanking(list[i], n);
    double best = 0.0;
    for (int m = 0; m < triples.users(k); ++m) {
      best = std::max(best, weights[k][m] * link::RateBound(triples, k, m, n, nb));
    }
    total += best;
  }
  return total;
}

double BoundObjective(const link::RateTriples& triples,
                      const std::vector<std::vector<double>>& weights,
                      const net::NeighborMap& neighbors,
                      const BlankingMatrix& blanking) {
  double total = 0.0;
  for (int n = 0; n < triples.rbs(); ++n) {
    total += BoundObjectiveRb(triples, weights, neighbors, blanking, n);
  }
  return total;
}

}  // namespace icic::core
