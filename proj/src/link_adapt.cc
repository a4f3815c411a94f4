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

#include "icic/link_adapt.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <string>

#include "icic/errors.h"

namespace icic::link {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ParseBound(const std::string& field) {
  std::string s;
  for (char c : field) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "-inf" || s == "-Inf" || s == "-INF") return -kInf;
  if (s == "inf" || s == "+inf" || s == "Inf" || s == "INF") return kInf;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw ConfigError("bad number '" + field + "'");
  return v;
}

}  // namespace

AmcTable::AmcTable(std::vector<AmcRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ConfigError("AMC table is empty");
  if (rows_.front().low_db != -kInf) {
    throw ConfigError("AMC table must start at -inf");
  }
  if (rows_.back().high_db != kInf) {
    throw ConfigError("AMC table must end at +inf");
  }
  if (rows_.front().rate_kbps != 0.0) {
    throw ConfigError("lowest AMC interval must map to rate 0");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!(rows_[i].low_db < rows_[i].high_db)) {
      throw ConfigError("AMC row " + std::to_string(i) + " is empty");
    }
    if (i > 0) {
      if (rows_[i].low_db != rows_[i - 1].high_db) {
        throw ConfigError("AMC rows " + std::to_string(i - 1) + " and " +
                          std::to_string(i) + " are not contiguous");
      }
      if (rows_[i].rate_kbps < rows_[i - 1].rate_kbps) {
        throw ConfigError("AMC rates must be nondecreasing");
      }
    }
  }
}

const AmcTable& AmcTable::Default() {
  static const AmcTable table({
      {-kInf, -6.1, 0.0},
      {-6.1, -4.1, 35.3},
      {-4.1, -2.0, 56.4},
      {-2.0, -0.2, 92.4},
      {-0.2, 1.9, 131.4},
      {1.9, 3.8, 177.4},
      {3.8, 5.8, 223.1},
      {5.8, 8.5, 291.6},
      {8.5, 9.9, 388.4},
      {9.9, 12.5, 418.3},
      {12.5, 14.8, 544.3},
      {14.8, 16.1, 648.1},
      {16.1, 17.8, 721.7},
      {17.8, kInf, 807.4},
  });
  return table;
}

AmcTable AmcTable::LoadCsv(std::istream& in) {
  std::vector<AmcRow> rows;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("low_db", 0) == 0) continue;
    }
    std::stringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') ||
        !std::getline(ss, c)) {
      throw ConfigError("AMC CSV line " + std::to_string(line_no) +
                        ": expected low_db,high_db,rate_kbps");
    }
    try {
      rows.push_back({ParseBound(a), ParseBound(b), ParseBound(c)});
    } catch (const std::invalid_argument&) {
      throw ConfigError("AMC CSV line " + std::to_string(line_no) +
                        ": not a number");
    }
  }
  return AmcTable(std::move(rows));
}

double AmcTable::RateForDb(double sinr_db) const {
  for (const AmcRow& row : rows_) {
    if (sinr_db <= row.high_db) return row.rate_kbps;
  }
  return rows_.back().rate_kbps;
}

double LinkAdaptation::Rate(double sinr_linear) const {
  if (sinr_linear <= 0.0) return table.rows().front().rate_kbps;
  return table.RateForDb(10.0 * std::log10(sinr_linear) - sinr_margin_db);
}

double SinrExact(std::span<const double> gains, int serving,
                 std::span<const double> blanking,
                 const net::RadioConfig& radio) {
  double interference = 0.0;
  for (std::size_t j = 0; j < gains.size(); ++j) {
    if (static_cast<int>(j) == serving) continue;
    interference += (1.0 - blanking[j]) * gains[j];
  }
  return radio.tx_power_per_rb_w * gains[serving] /
         (radio.tx_power_per_rb_w * interference + radio.noise_per_rb_w);
}

double SinrAllOn(std::span<const double> gains, int serving,
                 const net::RadioConfig& radio) {
  double interference = 0.0;
  for (std::size_t j = 0; j < gains.size(); ++j) {
    if (static_cast<int>(j) != serving) interference += gains[j];
  }
  return radio.tx_power_per_rb_w * gains[serving] /
         (radio.tx_power_per_rb_w * interference + radio.noise_per_rb_w);
}

double SinrOneBlanked(std::span<const double> gains, int serving, int blanked,
                      const net::RadioConfig& radio) {
  // Same summation order as SinrExact, so the two agree bit for bit when
  // exactly `blanked` is off.
  double interference = 0.0;
  for (std::size_t j = 0; j < gains.size(); ++j) {
    const int jj = static_cast<int>(j);
    if (jj == serving || jj == blanked) continue;
    interference += gains[j];
  }
  return radio.tx_power_per_rb_w * gains[serving] /
         (radio.tx_power_per_rb_w * interference + radio.noise_per_rb_w);
}

double SinrBound(std::span<const double> gains, int serving,
                 std::span<const double> blanking,
                 std::span<const int> neighbors,
                 const net::RadioConfig& radio) {
  double bound = SinrAllOn(gains, serving, radio);
  for (int j : neighbors) {
    if (blanking[j] == 1.0) {
      bound = std::max(bound, SinrOneBlanked(gains, serving, j, radio));
    }
  }
  return bound;
}

RateTriples::RateTriples(const net::NeighborMap& neighbors,
                         std::vector<int> users, int rbs)
    : rbs_(rbs), users_(std::move(users)) {
  const int k_count = static_cast<int>(users_.size());
  degree_.resize(static_cast<std::size_t>(k_count));
  base_.resize(static_cast<std::size_t>(k_count));
  boosted_.resize(static_cast<std::size_t>(k_count));
  for (int k = 0; k < k_count; ++k) {
    degree_[k] = neighbors.degree(k);
    const std::size_t slots = static_cast<std::size_t>(users_[k]) * rbs;
    base_[k].assign(slots, 0.0);
    boosted_[k].assign(slots * degree_[k], 0.0);
  }
}

RateTriples PrecomputeRateTriples(const net::ChannelTensor& channel,
                                  const net::RadioConfig& radio,
                                  const net::NeighborMap& neighbors,
                                  const LinkAdaptation& link) {
  if (neighbors.num_sectors() != channel.sectors()) {
    throw ConfigError("neighbor map and channel disagree on sector count");
  }
  RateTriples triples(neighbors, channel.user_counts(), channel.rbs());
  for (int k = 0; k < channel.sectors(); ++k) {
    const auto nbrs = neighbors.of(k);
    for (int m = 0; m < channel.users(k); ++m) {
      for (int n = 0; n < channel.rbs(); ++n) {
        const auto gains = channel.gains(k, m, n);
        const double base = link.Rate(SinrAllOn(gains, k, radio));
        triples.base(k, m, n) = base;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
          const double boosted =
              link.Rate(SinrOneBlanked(gains, k, nbrs[i], radio));
          triples.boosted(k, m, n, static_cast<int>(i)) =
              std::max(boosted, base);
        }
      }
    }
  }
  return triples;
}

double RateBound(const RateTriples& triples, int k, int m, int n,
                 std::span<const double> neighbor_blanking) {
  double rate = triples.base(k, m, n);
  for (int i = 0; i < triples.degree(k); ++i) {
    if (neighbor_blanking[i] == 1.0) {
      rate = std::max(rate, triples.boosted(k, m, n, i));
    }
  }
  return rate;
}

}  // namespace icic::link
