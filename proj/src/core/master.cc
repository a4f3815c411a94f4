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

#include "icic/core/master.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "icic/errors.h"

namespace icic::core {

Mailbox::Mailbox(int sectors) : inbox_(static_cast<std::size_t>(sectors)) {}

void Mailbox::Post(int to, int from, std::vector<double> values) {
  std::lock_guard<std::mutex> lock(mu_);
  if (to < 0 || to >= static_cast<int>(inbox_.size())) {
    throw ProtocolError("message to unknown sector " + std::to_string(to));
  }
  values_ += values.size();
  ++messages_;
  inbox_[to].push_back({from, std::move(values)});
}

std::vector<std::vector<double>> Mailbox::Collect(
    int to, std::span<const int> senders) {
  std::vector<Message> box;
  {
    std::lock_guard<std::mutex> lock(mu_);
    box.swap(inbox_[to]);
  }
  std::vector<std::vector<double>> out(senders.size());
  std::vector<char> seen(senders.size(), 0);
  for (Message& msg : box) {
    const auto it = std::find(senders.begin(), senders.end(), msg.from);
    if (it == senders.end()) {
      throw ProtocolError("sector " + std::to_string(to) +
                          " got a message from non-neighbor " +
                          std::to_string(msg.from));
    }
    const std::size_t slot = static_cast<std::size_t>(it - senders.begin());
    if (seen[slot]) {
      throw ProtocolError("duplicate message from sector " +
                          std::to_string(msg.from) + " to " +
                          std::to_string(to));
    }
    seen[slot] = 1;
    out[slot] = std::move(msg.values);
  }
  for (std::size_t i = 0; i < senders.size(); ++i) {
    if (!seen[i]) {
      throw ProtocolError("sector " + std::to_string(to) +
                          " is missing the message from sector " +
                          std::to_string(senders[i]));
    }
  }
  return out;
}

std::uint64_t Mailbox::messages() const {
  std::lock_guard<std::mutex> lock(mu_);
  return messages_;
}

std::uint64_t Mailbox::values() const {
  std::lock_guard<std::mutex> lock(mu_);
  return values_;
}

double Quantize(double v, int bits) {
  const double levels = std::ldexp(1.0, bits) - 1.0;
  return std::round(std::clamp(v, 0.0, 1.0) * levels) / levels;
}

BlankingMatrix ComputeSubgradient(
    const BlankingMatrix& own_dual,
    const std::vector<std::vector<std::vector<double>>>& incoming) {
  BlankingMatrix g(own_dual.sectors(), own_dual.rbs());
  for (int k = 0; k < own_dual.sectors(); ++k) {
    for (int n = 0; n < own_dual.rbs(); ++n) {
      double v = -own_dual(k, n);
      for (const auto& msg : incoming[k]) {
        if (static_cast<int>(msg.size()) != own_dual.rbs()) {
          throw ProtocolError("neighbor message has the wrong length");
        }
        v += msg[n];
      }
      g(k, n) = v;
    }
  }
  return g;
}

void MasterStep(BlankingMatrix& blanking, const BlankingMatrix& subgradient,
                int iteration, double step, const BlankingMatrix* frozen) {
  const double delta = step / iteration;
  auto v = blanking.values();
  const auto g = subgradient.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (frozen != nullptr && frozen->values()[i] != 0.0) continue;
    v[i] = std::clamp(v[i] + delta * g[i], 0.0, 1.0);
  }
}

BlankingMatrix RoundBlanking(const BlankingMatrix& blanking) {
  BlankingMatrix out = blanking;
  for (double& v : out.values()) v = std::floor(v + 0.5);
  return out;
}

}  // namespace icic::core
