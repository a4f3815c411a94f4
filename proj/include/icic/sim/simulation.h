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


// Drop and sub-frame loop of the system-level simulation.

#ifndef ICIC_SIM_SIMULATION_H_
#define ICIC_SIM_SIMULATION_H_

#include "icic/link_adapt.h"
#include "icic/sim/config.h"
#include "icic/sim/metrics.h"

namespace icic::sim {

// Builds the link adaptation of `config`, loading the AMC table if given.
link::LinkAdaptation MakeLinkAdaptation(const SimConfig& config);

// One scheme at the configured weight policy; no trade-off sweep.
MetricsReport RunScheme(const SimConfig& config);

// RunScheme plus one trade-off point per metrics.tradeoff_alphas entry,
// each re-simulated on the same seeds.
MetricsReport RunSimulation(const SimConfig& config);

}  // namespace icic::sim

#endif  // ICIC_SIM_SIMULATION_H_
