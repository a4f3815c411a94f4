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


// Oracle and property suites shared by the CLI and the acceptance tests.

#ifndef ICIC_CHECKS_H_
#define ICIC_CHECKS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "icic/oracle.h"
#include "icic/sim/config.h"

namespace icic::checks {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// "PASS [id] name: detail" or "FAIL ...".
std::string FormatResult(const CriterionResult& r);

struct GapBenchOptions {
  int instances = 50;
  std::uint64_t seed = 1000;
  oracle::DeskOptions desk;
  int iterations = 5;
};

struct GapBenchRow {
  std::uint64_t seed = 0;
  double bound_optimum = 0.0;  // exhaustive, rate-bound objective
  double lp_optimum = 0.0;     // relaxation, summed over RBs
  double run1 = 0.0;           // bound objective of I*, runs = 1
  double run2 = 0.0;           // same with runs = 2
  double gap1 = 0.0;           // percent below bound_optimum
  double gap2 = 0.0;
  // Percent below lp_optimum of the rounded iterate after p steps: the
  // final iterate and the best one so far.
  std::vector<double> lp_gap_last;
  std::vector<double> lp_gap_best;
};

struct GapBenchResult {
  std::vector<GapBenchRow> rows;
  double mean_gap1 = 0.0;
  double std_gap1 = 0.0;
  double mean_gap2 = 0.0;
  double std_gap2 = 0.0;
  std::vector<double> mean_lp_gap_last;
  std::vector<double> mean_lp_gap_best;
  double seconds = 0.0;
};

GapBenchResult RunGapBench(const GapBenchOptions& options);
void WriteGapBench(std::ostream& out, const GapBenchResult& result);

CriterionResult CheckOptimalityGap(const GapBenchResult& bench);      // 1
CriterionResult CheckConvergence(const GapBenchResult& bench);   // 2
CriterionResult CheckBinaryFraction(std::uint64_t seed);           // 3
CriterionResult CheckFlowEnumeration(std::uint64_t seed);        // 4
CriterionResult CheckSubgradient(std::uint64_t seed);            // 5
CriterionResult CheckSetEquivalence();                                   // 6
CriterionResult CheckSinrBoundIdentity(std::uint64_t seed);              // 7
CriterionResult CheckOverhead();                                 // 8
CriterionResult CheckReductions(std::uint64_t seed);             // 9
CriterionResult CheckDeterminism(const sim::SimConfig& config);  // 10
CriterionResult CheckDirectional(const sim::SimConfig& config);  // 11

// Small configuration used by the determinism and directional checks.
sim::SimConfig DeskScenario();

// Property suites 3 to 10.
std::vector<CriterionResult> RunVerify(std::uint64_t seed);

}  // namespace icic::checks

#endif  // ICIC_CHECKS_H_
