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

#include <gtest/gtest.h>

#include "icic/core/algorithm.h"
#include "icic/core/certify.h"
#include "icic/core/subproblem.h"
#include "icic/errors.h"
#include "icic/oracle.h"

namespace icic::oracle {
namespace {

TEST(Exhaustive, SingleSectorNeverBlanks) {
  DeskOptions o;
  o.sectors = 1;
  o.topology = DeskOptions::Topology::kRing;
  o.ring_degree = 0;
  const auto inst = MakeDeskInstance(o, 1);
  const auto res = ExhaustiveOriginal(inst);
  double want = 0.0;
  for (int n = 0; n < inst.rbs(); ++n) {
    double best = 0.0;
    for (int m = 0; m < inst.channel.users(0); ++m) {
      best = std::max(best, inst.weights[0][m] * inst.triples.base(0, m, n));
    }
    want += best;
  }
  EXPECT_EQ(res.value, want);
  for (double v : res.blanking.values()) EXPECT_EQ(v, 0.0);
}

TEST(Exhaustive, NoCouplingMeansNoBlanking) {
  auto inst = MakeDeskInstance({}, 2);
  for (int k = 0; k < inst.sectors(); ++k) {
    for (int m = 0; m < inst.channel.users(k); ++m) {
      for (int n = 0; n < inst.rbs(); ++n) {
        for (int j = 0; j < inst.sectors(); ++j) {
          if (j != k) inst.channel.gain(k, m, n, j) = 0.0;
        }
      }
    }
  }
  inst.triples = link::PrecomputeRateTriples(inst.channel, inst.radio,
                                             inst.neighbors, inst.link);
  const auto res = ExhaustiveOriginal(inst);
  for (double v : res.blanking.values()) EXPECT_EQ(v, 0.0);
}

TEST(Exhaustive, BoundAgreesWithOriginalOnSparseBlanking) {
  for (int s = 0; s < 5; ++s) {
    const auto inst = MakeDeskInstance({}, 10 + s);
    const auto bound = ExhaustiveBound(inst);
    EXPECT_LE(bound.value, ExhaustiveOriginal(inst).value + 1e-9);
    EXPECT_NEAR(bound.value, bound.linear_value, 1e-9);
    // On a pattern where every sector has at most one blanked neighbor the
    // two objectives coincide.
    core::BlankingMatrix one(inst.sectors(), inst.rbs());
    one(0, 0) = 1.0;
    const auto exact = core::FinalizeSchedule(one, inst.channel, inst.weights,
                                              inst.radio, inst.link);
    EXPECT_NEAR(core::BoundObjective(inst.triples, inst.weights, inst.neighbors, one),
                exact.objective, 1e-9 * exact.objective);
  }
}

TEST(Exhaustive, ZeroBranchIsReuse1) {
  const auto inst = MakeDeskInstance({}, 20);
  const core::BlankingMatrix zero(inst.sectors(), inst.rbs());
  const auto r1 = core::FinalizeSchedule(zero, inst.channel, inst.weights,
                                         inst.radio, inst.link);
  EXPECT_NEAR(core::BoundObjective(inst.triples, inst.weights, inst.neighbors, zero),
              r1.objective, 1e-9 * r1.objective);
  EXPECT_GE(ExhaustiveBound(inst).value, r1.objective - 1e-9);
}

TEST(Exhaustive, RejectsLargeNetworks) {
  DeskOptions o;
  o.sectors = kMaxSectors + 1;
  o.topology = DeskOptions::Topology::kRing;
  const auto inst = MakeDeskInstance(o, 1);
  EXPECT_THROW(ExhaustiveOriginal(inst), BudgetExceededError);
}

TEST(Enumeration, TrivialCases) {
  const auto inst = MakeDeskInstance({}, 30);
  core::BlankingMatrix b(inst.sectors(), inst.rbs());
  std::vector<double> scratch;
  auto in = core::SubproblemInput::Gather(3, 0, b, inst.neighbors,
                                          inst.weights[3], inst.triples, scratch);
  double best = 0.0;
  for (int m = 0; m < inst.channel.users(3); ++m) {
    best = std::max(best, inst.weights[3][m] * inst.triples.base(3, m, 0));
  }
  EXPECT_EQ(EnumerateSubproblem(in).value, best);
  b(3, 0) = 1.0;
  in = core::SubproblemInput::Gather(3, 0, b, inst.neighbors, inst.weights[3],
                                     inst.triples, scratch);
  EXPECT_EQ(EnumerateSubproblem(in).value, 0.0);
  b(3, 0) = 0.5;
  in = core::SubproblemInput::Gather(3, 0, b, inst.neighbors, inst.weights[3],
                                     inst.triples, scratch);
  EXPECT_THROW(EnumerateSubproblem(in), ConfigError);
}

TEST(SetEquivalence, SmallCases) {
  const auto a = SetEquivalenceCheck(1, 1);
  EXPECT_TRUE(a.equal);
  EXPECT_GT(a.points, 0);
  EXPECT_TRUE(SetEquivalenceCheck(2, 2).equal);
  EXPECT_TRUE(SetEquivalenceCheck(3, 3).equal);
}

TEST(SetEquivalence, NeedsSingleAssignment) {
  EXPECT_FALSE(SetEquivalenceCheck(2, 1, false).equal);
}

TEST(SinrBoundIdentity, NoViolations) {
  const auto rep = SinrBoundIdentityCheck(10000, 3);
  EXPECT_EQ(rep.samples, 10000);
  EXPECT_EQ(rep.identity_violations, 0);
  EXPECT_EQ(rep.bound_violations, 0);
  EXPECT_EQ(rep.exactness_violations, 0);
}

TEST(SinrBoundIdentity, EqualGainPairFactor) {
  net::RadioConfig radio;
  radio.tx_power_per_rb_w = 2.0;
  radio.noise_per_rb_w = 0.5;
  const std::vector<double> g{3.0, 0.4, 0.4, 0.1};
  const std::vector<double> b{0.0, 1.0, 1.0, 0.0};
  const std::vector<int> nb{1, 2, 3};
  const double exact = link::SinrExact(g, 0, b, radio);
  const double bound = link::SinrBound(g, 0, b, nb, radio);
  EXPECT_NEAR(exact / bound, 1.0 + 2.0 * 0.4 / (2.0 * 0.1 + 0.5), 1e-12);
}

TEST(RelaxedLp, DominatesBinaryOptimum) {
  for (int s = 0; s < 5; ++s) {
    const auto inst = MakeDeskInstance({}, 40 + s);
    double lp = 0.0;
    for (int n = 0; n < inst.rbs(); ++n) {
      lp += SolveRelaxedLp(inst.triples, inst.weights, inst.neighbors, n).value;
    }
    EXPECT_GE(lp, ExhaustiveBound(inst).value - 1e-6);
  }
}

}  // namespace
}  // namespace icic::oracle
