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


#include "icic/sim/metrics.h"

#include <algorithm>
#include <cmath>

#include "icic/errors.h"

namespace icic::sim {

double Percentile(const std::vector<double>& sorted, double level) {
  if (sorted.empty()) throw ConfigError("percentile of an empty sample");
  if (!(level >= 0.0 && level <= 100.0)) {
    throw ConfigError("percentile level outside [0, 100]");
  }
  const double pos = level / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<std::pair<double, double>> EmpiricalCdf(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::vector<std::pair<double, double>> cdf;
  cdf.reserve(values.size());
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    cdf.emplace_back(values[i], static_cast<double>(i + 1) / n);
  }
  return cdf;
}

double OutageProbability(const std::vector<double>& values, double rmin) {
  if (values.empty()) return 0.0;
  const auto below = std::count_if(values.begin(), values.end(),
                                   [rmin](double v) { return v < rmin; });
  return static_cast<double>(below) / static_cast<double>(values.size());
}

std::vector<double> BlankedPmf(const std::vector<int>& counts, int rbs) {
  if (counts.empty()) return {};
  std::vector<double> pmf(static_cast<std::size_t>(rbs) + 1, 0.0);
  for (int c : counts) {
    if (c < 0 || c > rbs) throw ConfigError("blanked RB count out of range");
    pmf[c] += 1.0;
  }
  for (double& p : pmf) p /= static_cast<double>(counts.size());
  return pmf;
}

std::vector<double> Throughputs(const MetricsReport& report) {
  std::vector<double> v;
  v.reserve(report.users.size());
  for (const auto& u : report.users) v.push_back(u.throughput);
  return v;
}

void FinalizeMetrics(MetricsReport& report, int rbs) {
  std::vector<double> v = Throughputs(report);
  std::sort(v.begin(), v.end());
  report.percentiles.clear();
  report.outage.clear();
  report.aggregate = 0.0;
  if (!v.empty()) {
    for (double p : report.percentile_levels) {
      report.percentiles.push_back(Percentile(v, p));
    }
    for (double r : report.rmin) {
      report.outage.push_back(OutageProbability(v, r));
    }
  }
  if (!report.sectors.empty()) {
    double total = 0.0;
    for (const auto& s : report.sectors) total += s.throughput;
    report.aggregate = total / static_cast<double>(report.sectors.size());
  }
  report.blanked_pmf = BlankedPmf(report.blanked_counts, rbs);
}

}  // namespace icic::sim
