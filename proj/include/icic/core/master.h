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

// Master side of the decomposition: message exchange between sectors and the
// projected subgradient update.

#ifndef ICIC_CORE_MASTER_H_
#define ICIC_CORE_MASTER_H_

#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "icic/core/blanking.h"
#include "icic/net_model.h"

namespace icic::core {

// Per-recipient inboxes. Post is safe from concurrent producers; each
// recipient is drained by a single consumer.
class Mailbox {
 public:
  explicit Mailbox(int sectors);

  void Post(int to, int from, std::vector<double> values);
  // Removes the messages addressed to `to` and returns them in `senders`
  // order. Throws ProtocolError when a sender did not post exactly once.
  std::vector<std::vector<double>> Collect(int to,
                                           std::span<const int> senders);

  std::uint64_t messages() const;
  std::uint64_t values() const;

 private:
  struct Message {
    int from;
    std::vector<double> values;
  };
  mutable std::mutex mu_;
  std::vector<std::vector<Message>> inbox_;
  std::uint64_t messages_ = 0;
  std::uint64_t values_ = 0;
};

// Rounds v in [0, 1] to the nearest of 2^bits uniform levels.
double Quantize(double v, int bits);

// Lambda^(k)_n = -lambda^(k)_n + sum over neighbors j of lambda^(j,k)_n.
// incoming[k][i] holds the values sent to k by its i-th neighbor.
BlankingMatrix ComputeSubgradient(
    const BlankingMatrix& own_dual,
    const std::vector<std::vector<std::vector<double>>>& incoming);

// I <- clip(I + (c / p) Lambda, 0, 1) on entries where frozen is 0.
void MasterStep(BlankingMatrix& blanking, const BlankingMatrix& subgradient,
                int iteration, double step, const BlankingMatrix* frozen);

// floor(I + 0.5) elementwise.
BlankingMatrix RoundBlanking(const BlankingMatrix& blanking);

}  // namespace icic::core

#endif  // ICIC_CORE_MASTER_H_
