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


// CSV and manifest emission for a simulation run.

#ifndef ICIC_SIM_REPORT_H_
#define ICIC_SIM_REPORT_H_

#include <iosfwd>
#include <string>

#include "icic/sim/metrics.h"

namespace icic::sim {

void WriteUserThroughput(std::ostream& out, const MetricsReport& r);
void WriteCdf(std::ostream& out, const MetricsReport& r);
void WriteTradeoff(std::ostream& out, const MetricsReport& r);
void WriteOutage(std::ostream& out, const MetricsReport& r);
void WriteBlankedPmf(std::ostream& out, const MetricsReport& r);
void WriteGaps(std::ostream& out, const MetricsReport& r);
void WriteOverhead(std::ostream& out, const MetricsReport& r);
// JSON with the config hash and seeds.
void WriteManifest(std::ostream& out, const MetricsReport& r);

// Creates `dir` if needed and writes every file; throws Error naming the
// file and the system message on I/O failure.
void EmitReports(const MetricsReport& r, const std::string& dir);

}  // namespace icic::sim

#endif  // ICIC_SIM_REPORT_H_
