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

// SINR evaluation and AMC rate mapping, plus the single-blanked-interferer
// bounds that feed the optimizer.

#ifndef ICIC_LINK_ADAPT_H_
#define ICIC_LINK_ADAPT_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "icic/net_model.h"

namespace icic::link {

// One AMC row: SINR in (low_db, high_db] maps to rate_kbps.
struct AmcRow {
  double low_db;
  double high_db;
  double rate_kbps;
};

// Step function from SINR to rate. Rows are contiguous, cover the real line,
// are nondecreasing in rate and the first row has rate 0.
class AmcTable {
 public:
  explicit AmcTable(std::vector<AmcRow> rows);

  // The 14-row LTE table shipped as default.
  static const AmcTable& Default();
  // CSV with header `low_db,high_db,rate_kbps`; `-inf`/`inf` allowed.
  static AmcTable LoadCsv(std::istream& in);

  std::span<const AmcRow> rows() const { return rows_; }
  double RateForDb(double sinr_db) const;

 private:
  std::vector<AmcRow> rows_;
};

// AMC table plus the optional SINR estimation margin subtracted before the
// lookup.
struct LinkAdaptation {
  AmcTable table = AmcTable::Default();
  double sinr_margin_db = 0.0;

  // f(sinr); f(0) == 0.
  double Rate(double sinr_linear) const;
};

// Exact SINR of a user with per-sector gains `gains` (serving sector at
// index `serving`) when sector j blanks iff blanking[j] == 1.
double SinrExact(std::span<const double> gains, int serving,
                 std::span<const double> blanking,
                 const net::RadioConfig& radio);

// SINR when every sector transmits.
double SinrAllOn(std::span<const double> gains, int serving,
                 const net::RadioConfig& radio);

// SINR when only `blanked` stops transmitting.
double SinrOneBlanked(std::span<const double> gains, int serving, int blanked,
                      const net::RadioConfig& radio);

// Lower bound that removes only the strongest blanked neighbor.
double SinrBound(std::span<const double> gains, int serving,
                 std::span<const double> blanking,
                 std::span<const int> neighbors,
                 const net::RadioConfig& radio);

// Per (k, m, n): the rate when all sectors transmit and, for each neighbor
// i of k, the rate when only that neighbor blanks.
class RateTriples {
 public:
  RateTriples() = default;
  RateTriples(const net::NeighborMap& neighbors, std::vector<int> users,
              int rbs);

  int sectors() const { return static_cast<int>(users_.size()); }
  int rbs() const { return rbs_; }
  int users(int k) const { return users_[k]; }
  int degree(int k) const { return degree_[k]; }

  double base(int k, int m, int n) const { return base_[k][Slot(k, m, n)]; }
  double& base(int k, int m, int n) { return base_[k][Slot(k, m, n)]; }
  // f(gamma~) for neighbor slot i of sector k.
  double boosted(int k, int m, int n, int i) const {
    return boosted_[k][Slot(k, m, n) * degree_[k] + i];
  }
  double& boosted(int k, int m, int n, int i) {
    return boosted_[k][Slot(k, m, n) * degree_[k] + i];
  }
  // r~ = f(gamma~) - r.
  double extra(int k, int m, int n, int i) const {
    return boosted(k, m, n, i) - base(k, m, n);
  }

 private:
  std::size_t Slot(int k, int m, int n) const {
    (void)k;
    return static_cast<std::size_t>(m) * rbs_ + n;
  }

  int rbs_ = 0;
  std::vector<int> users_;
  std::vector<int> degree_;
  std::vector<std::vector<double>> base_;
  std::vector<std::vector<double>> boosted_;
};

RateTriples PrecomputeRateTriples(const net::ChannelTensor& channel,
                                  const net::RadioConfig& radio,
                                  const net::NeighborMap& neighbors,
                                  const LinkAdaptation& link);

// r + max_i I_i * r~_i, evaluated as max(r, max over blanked i of
// f(gamma~_i)) so that it is exact when at most one neighbor blanks.
// neighbor_blanking[i] is the blanking bit of neighbor slot i.
double RateBound(const RateTriples& triples, int k, int m, int n,
                 std::span<const double> neighbor_blanking);

}  // namespace icic::link

#endif  // ICIC_LINK_ADAPT_H_
