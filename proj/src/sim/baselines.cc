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


#include "icic/sim/baselines.h"

#include <cmath>

#include "icic/errors.h"

namespace icic::sim {

int BandSize(int count, int band) {
  return count / 3 + (band < count % 3 ? 1 : 0);
}

int BandStart(int count, int band) {
  int start = 0;
  for (int b = 0; b < band; ++b) start += BandSize(count, b);
  return start;
}

int PfrInnerBand(int rbs, double inner_fraction) {
  return static_cast<int>(std::ceil(inner_fraction * rbs));
}

core::BlankingMatrix BaselineBlanking(Scheme scheme, int sectors, int rbs,
                                      double inner_fraction) {
  core::BlankingMatrix b(sectors, rbs, 0.0);
  int offset = 0;
  switch (scheme) {
    case Scheme::kReuse1:
      return b;
    case Scheme::kReuse3:
      break;
    case Scheme::kPfr:
      offset = PfrInnerBand(rbs, inner_fraction);
      break;
    case Scheme::kProposed:
      throw ConfigError("the proposed scheme has no static pattern");
  }
  const int outer = rbs - offset;
  if (outer < 3) throw ConfigError("too few RBs for the reuse-3 band split");
  for (int k = 0; k < sectors; ++k) {
    const int c = ReuseClass(k);
    const int lo = offset + BandStart(outer, c);
    const int hi = lo + BandSize(outer, c);
    for (int n = offset; n < rbs; ++n) b(k, n) = (n >= lo && n < hi) ? 0.0 : 1.0;
  }
  return b;
}

}  // namespace icic::sim
