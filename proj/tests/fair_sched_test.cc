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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "icic/errors.h"
#include "icic/fair_sched.h"

namespace icic::sched {
namespace {

TEST(Tracker, SingleUpdate) {
  AverageRateTracker t(1, 100.0);
  t.set_average(0, 1.0);
  const std::vector<double> r{2.0};
  t.Update(r);
  EXPECT_DOUBLE_EQ(t.average(0), 1.01);
}

TEST(Tracker, FixedPoint) {
  AverageRateTracker t(1, 100.0);
  t.set_average(0, 3.0);
  const std::vector<double> r{3.0};
  for (int i = 0; i < 50; ++i) t.Update(r);
  EXPECT_NEAR(t.average(0), 3.0, 1e-12);
}

TEST(Tracker, GeometricDecay) {
  AverageRateTracker t(1, 100.0);
  t.set_average(0, 50.0);
  const std::vector<double> r{4.0};
  for (int i = 0; i < 1000; ++i) t.Update(r);
  EXPECT_LE(std::abs(t.average(0) - 4.0),
            std::abs(50.0 - 4.0) * std::pow(1.0 - 1.0 / 100.0, 1000) + 1e-12);
}

TEST(Tracker, RejectsShortWindow) {
  EXPECT_THROW(AverageRateTracker(1, 0.5), ConfigError);
}

TEST(Weights, MaxSinr) {
  AverageRateTracker t(3, 10.0);
  t.set_average(1, 7.0);
  for (double w : ComputeWeights(WeightPolicy::AlphaFair(0.0), t)) {
    EXPECT_EQ(w, 1.0);
  }
}

TEST(Weights, ProportionalFair) {
  AverageRateTracker t(1, 10.0);
  t.set_average(0, 2.0);
  EXPECT_DOUBLE_EQ(ComputeWeights(WeightPolicy::AlphaFair(1.0), t)[0], 0.5);
}

TEST(Weights, LinearIsClamped) {
  AverageRateTracker t(1, 10.0);
  t.set_average(0, 7.0);
  EXPECT_EQ(ComputeWeights(WeightPolicy::Linear(5.0), t)[0], 0.0);
}

TEST(Weights, RejectsNegativeAlpha) {
  EXPECT_THROW(WeightPolicy::AlphaFair(-1.0).Validate(), ConfigError);
}

TEST(Schedule, SingleUserTakesAllOpenRbs) {
  const std::vector<double> w{1.0}, r{1.0, 2.0, 3.0}, b{0.0, 1.0, 0.0};
  const auto a = LocalSchedule(w, r, 3, b);
  EXPECT_EQ(a.owner, (std::vector<int>{0, -1, 0}));
}

TEST(Schedule, ArgMax) {
  const std::vector<double> w{1.0, 1.0}, r{3.0, 5.0}, b{0.0};
  EXPECT_EQ(LocalSchedule(w, r, 1, b).owner[0], 1);
}

TEST(Schedule, TiesGoToLowestIndex) {
  const std::vector<double> w{2.0, 1.0}, r{1.0, 2.0}, b{0.0};
  EXPECT_EQ(LocalSchedule(w, r, 1, b).owner[0], 0);
}

TEST(Schedule, MatchesExhaustiveAssignment) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int s = 0; s < 100; ++s) {
    const int users = 5, rbs = 8;
    std::vector<double> w(users), r(users * rbs), b(rbs);
    for (double& v : w) v = u(rng);
    for (double& v : r) v = std::floor(u(rng) * 4.0);
    for (double& v : b) v = u(rng) < 0.3 ? 1.0 : 0.0;
    const auto a = LocalSchedule(w, r, rbs, b);
    // Best total over all M^N assignments equals the greedy total.
    double greedy = 0.0;
    for (int n = 0; n < rbs; ++n) {
      if (a.owner[n] >= 0) greedy += w[a.owner[n]] * r[a.owner[n] * rbs + n];
    }
    double best = 0.0;
    std::vector<int> pick(rbs, 0);
    while (true) {
      double total = 0.0;
      for (int n = 0; n < rbs; ++n) {
        if (b[n] == 0.0) total += w[pick[n]] * r[pick[n] * rbs + n];
      }
      best = std::max(best, total);
      int n = 0;
      while (n < rbs && ++pick[n] == users) pick[n++] = 0;
      if (n == rbs) break;
    }
    EXPECT_NEAR(greedy, best, 1e-12);
    for (int n = 0; n < rbs; ++n) EXPECT_EQ(a.owner[n] < 0, b[n] != 0.0);
  }
}

}  // namespace
}  // namespace icic::sched
