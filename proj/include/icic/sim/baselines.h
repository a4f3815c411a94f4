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


// Static frequency-reuse blanking patterns.

#ifndef ICIC_SIM_BASELINES_H_
#define ICIC_SIM_BASELINES_H_

#include "icic/core/blanking.h"
#include "icic/sim/config.h"

namespace icic::sim {

// Reuse class of a sector: its face index within the tri-sector site.
inline int ReuseClass(int sector) { return sector % 3; }

// Sizes of a split of `count` items into three bands; the first
// `count % 3` bands get one extra item.
int BandSize(int count, int band);
int BandStart(int count, int band);

// Number of RBs every sector uses under PFR.
int PfrInnerBand(int rbs, double inner_fraction);

// reuse1: all zero. reuse3: class c transmits only on band c of N.
// pfr: the inner band is reuse-1, the outer RBs follow reuse-3.
// kProposed is rejected.
core::BlankingMatrix BaselineBlanking(Scheme scheme, int sectors, int rbs,
                                      double inner_fraction = 0.6);

}  // namespace icic::sim

#endif  // ICIC_SIM_BASELINES_H_
