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

// Per-sector fair scheduling driven by exponentially averaged user rates.

#ifndef ICIC_FAIR_SCHED_H_
#define ICIC_FAIR_SCHED_H_

#include <span>
#include <vector>

namespace icic::sched {

class AverageRateTracker {
 public:
  static constexpr double kDefaultFloor = 1e-3;

  AverageRateTracker() = default;
  // Throws ConfigError when window < 1 or floor <= 0.
  AverageRateTracker(int users, double window, double floor = kDefaultFloor);

  int users() const { return static_cast<int>(avg_.size()); }
  double window() const { return window_; }
  std::span<const double> average() const { return avg_; }
  double average(int m) const { return avg_[m]; }
  void set_average(int m, double value);

  // avg <- (1 - 1/t_c) avg + rate / t_c, floored.
  void Update(std::span<const double> rate);

 private:
  double window_ = 1.0;
  double floor_ = kDefaultFloor;
  std::vector<double> avg_;
};

struct WeightPolicy {
  enum class Mode { kAlphaFair, kLinear };
  Mode mode = Mode::kAlphaFair;
  double alpha = 1.0;
  double beta = 0.0;

  static WeightPolicy AlphaFair(double alpha);
  static WeightPolicy Linear(double beta);
  void Validate() const;
};

std::vector<double> ComputeWeights(const WeightPolicy& policy,
                                   const AverageRateTracker& tracker);

// Per-sector RB assignment; owner[n] is the scheduled user or -1 when the
// RB is blanked.
struct Assignment {
  std::vector<int> owner;

  int rbs() const { return static_cast<int>(owner.size()); }
  bool x(int m, int n) const { return owner[n] == m; }
};

// Gives every non-blanked RB to argmax_m w_m R_{m,n}, ties to the lowest m.
// rates is indexed [m * rbs + n].
Assignment LocalSchedule(std::span<const double> weights,
                         std::span<const double> rates, int rbs,
                         std::span<const double> blanking);

}  // namespace icic::sched

#endif  // ICIC_FAIR_SCHED_H_
