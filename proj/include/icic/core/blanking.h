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

// Per-sector, per-RB blanking variables.

#ifndef ICIC_CORE_BLANKING_H_
#define ICIC_CORE_BLANKING_H_

#include <span>
#include <vector>

namespace icic::core {

// I[k][n] in [0, 1]; 1 means sector k leaves RB n unused.
class BlankingMatrix {
 public:
  BlankingMatrix() = default;
  BlankingMatrix(int sectors, int rbs, double value = 0.0)
      : sectors_(sectors),
        rbs_(rbs),
        v_(static_cast<std::size_t>(sectors) * rbs, value) {}

  int sectors() const { return sectors_; }
  int rbs() const { return rbs_; }
  double operator()(int k, int n) const { return v_[Index(k, n)]; }
  double& operator()(int k, int n) { return v_[Index(k, n)]; }
  std::span<const double> row(int k) const {
    return {v_.data() + Index(k, 0), static_cast<std::size_t>(rbs_)};
  }
  std::span<double> row(int k) {
    return {v_.data() + Index(k, 0), static_cast<std::size_t>(rbs_)};
  }
  std::span<const double> values() const { return v_; }
  std::span<double> values() { return v_; }

  bool IsBinary() const {
    for (double x : v_) {
      if (x != 0.0 && x != 1.0) return false;
    }
    return true;
  }

  bool operator==(const BlankingMatrix&) const = default;

 private:
  std::size_t Index(int k, int n) const {
    return static_cast<std::size_t>(k) * rbs_ + n;
  }

  int sectors_ = 0;
  int rbs_ = 0;
  std::vector<double> v_;
};

}  // namespace icic::core

#endif  // ICIC_CORE_BLANKING_H_
