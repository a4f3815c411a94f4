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


// Acceptance suite: one PASS/FAIL line per criterion.

#include <cstdio>
#include <vector>

#include "icic/checks.h"

int main() {
  using namespace icic::checks;
  constexpr std::uint64_t kSeed = 1;
  const GapBenchResult bench = RunGapBench(GapBenchOptions{});
  std::vector<CriterionResult> results{CheckOptimalityGap(bench),
                                       CheckConvergence(bench)};
  for (auto& r : RunVerify(kSeed)) results.push_back(r);
  results.push_back(CheckDirectional(DeskScenario()));
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", FormatResult(r).c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
