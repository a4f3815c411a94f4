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

#include "icic/fair_sched.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "icic/errors.h"

namespace icic::sched {

AverageRateTracker::AverageRateTracker(int users, double window,
                                       double floor)
    : window_(window), floor_(floor) {
  if (!(window >= 1.0)) {
    throw ConfigError("averaging window must be >= 1, got " +
                      std::to_string(window));
  }
  if (!(floor > 0.0)) throw ConfigError("rate floor must be positive");
  if (users < 0) throw ConfigError("negative user count");
  avg_.assign(static_cast<std::size_t>(users), floor_);
}

void AverageRateTracker::set_average(int m, double value) {
  avg_[m] = std::max(value, floor_);
}

void AverageRateTracker::Update(std::span<const double> rate) {
  const double keep = 1.0 - 1.0 / window_;
  for (std::size_t m = 0; m < avg_.size(); ++m) {
    avg_[m] = std::max(keep * avg_[m] + rate[m] / window_, floor_);
  }
}

WeightPolicy WeightPolicy::AlphaFair(double alpha) {
  WeightPolicy p;
  p.mode = Mode::kAlphaFair;
  p.alpha = alpha;
  p.Validate();
  return p;
}

WeightPolicy WeightPolicy::Linear(double beta) {
  WeightPolicy p;
  p.mode = Mode::kLinear;
  p.beta = beta;
  p.Validate();
  return p;
}

void WeightPolicy::Validate() const {
  if (mode == Mode::kAlphaFair && !(alpha >= 0.0 && std::isfinite(alpha))) {
    throw ConfigError("alpha must be a finite value >= 0");
  }
  if (mode == Mode::kLinear && !(beta >= 0.0 && std::isfinite(beta))) {
    throw ConfigError("beta must be a finite value >= 0");
  }
}

std::vector<double> ComputeWeights(const WeightPolicy& policy,
                                   const AverageRateTracker& tracker) {
  std::vector<double> w(static_cast<std::size_t>(tracker.users()));
  for (int m = 0; m < tracker.users(); ++m) {
    const double avg = tracker.average(m);
    if (policy.mode == WeightPolicy::Mode::kAlphaFair) {
      w[m] = policy.alpha == 0.0 ? 1.0 : std::pow(avg, -policy.alpha);
    } else {
      w[m] = std::max(policy.beta - avg, 0.0);
    }
  }
  return w;
}

Assignment LocalSchedule(std::span<const double> weights,
                         std::span<const double> rates, int rbs,
                         std::span<const double> blanking) {
  Assignment a;
  a.owner.assign(static_cast<std::size_t>(rbs), -1);
  const int users = static_cast<int>(weights.size());
  for (int n = 0; n < rbs; ++n) {
    if (blanking[n] != 0.0 || users == 0) continue;
    int best = 0;
    double best_value = weights[0] * rates[n];
    for (int m = 1; m < users; ++m) {
      const double v = weights[m] * rates[static_cast<std::size_t>(m) * rbs + n];
      if (v > best_value) {
        best = m;
        best_value = v;
      }
    }
    a.owner[n] = best;
  }
  return a;
}

}  // namespace icic::sched
