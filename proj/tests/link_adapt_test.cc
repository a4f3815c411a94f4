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


#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "icic/errors.h"
#include "icic/link_adapt.h"

namespace icic::link {
namespace {

net::RadioConfig UnitRadio() {
  net::RadioConfig r;
  r.tx_power_per_rb_w = 1.0;
  r.noise_per_rb_w = 1.0;
  return r;
}

double Db(double db) { return std::pow(10.0, db / 10.0); }

TEST(Amc, TableRows) {
  const LinkAdaptation link;
  EXPECT_EQ(link.Rate(Db(0.0)), 131.4);
  EXPECT_EQ(link.Rate(Db(-10.0)), 0.0);
  EXPECT_EQ(link.Rate(Db(20.0)), 807.4);
  EXPECT_EQ(link.Rate(0.0), 0.0);
  EXPECT_EQ(AmcTable::Default().rows().size(), 14u);
}

TEST(Amc, UpperEdgesAreInclusive) {
  const auto& t = AmcTable::Default();
  EXPECT_EQ(t.RateForDb(-6.1), 0.0);
  EXPECT_EQ(t.RateForDb(-6.0999), 35.3);
  EXPECT_EQ(t.RateForDb(9.9), 388.4);
  EXPECT_EQ(t.RateForDb(10.0), 418.3);
  EXPECT_EQ(t.RateForDb(16.1), 648.1);
}

TEST(Amc, MarginShiftsTheLookup) {
  LinkAdaptation link;
  link.sinr_margin_db = 6.0;
  EXPECT_EQ(link.Rate(Db(6.0)), 131.4);
}

TEST(Amc, CsvRoundTrip) {
  std::istringstream in(
      "low_db,high_db,rate_kbps\n-inf,0,0\n0,10,100\n10,inf,200\n");
  const AmcTable t = AmcTable::LoadCsv(in);
  EXPECT_EQ(t.RateForDb(5.0), 100.0);
  EXPECT_EQ(t.RateForDb(11.0), 200.0);
}

TEST(Amc, RejectsGapsAndDecreasingRates) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(AmcTable({{-inf, 0.0, 0.0}, {1.0, inf, 5.0}}), ConfigError);
  EXPECT_THROW(AmcTable({{-inf, 0.0, 0.0}, {0.0, 1.0, 5.0}, {1.0, inf, 4.0}}),
               ConfigError);
}

TEST(Sinr, AllInterferersBlanked) {
  const auto radio = UnitRadio();
  const std::vector<double> g{2.0, 0.5, 0.25};
  const std::vector<double> blank{0.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(SinrExact(g, 0, blank, radio), 2.0);
}

TEST(Sinr, SingleSector) {
  const auto radio = UnitRadio();
  const std::vector<double> g{3.0};
  const std::vector<double> blank{0.0};
  EXPECT_DOUBLE_EQ(SinrExact(g, 0, blank, radio), 3.0);
  EXPECT_DOUBLE_EQ(SinrAllOn(g, 0, radio), 3.0);
}

TEST(Sinr, MixedBlankingMatchesTermByTerm) {
  net::RadioConfig radio;
  radio.tx_power_per_rb_w = 0.8;
  radio.noise_per_rb_w = 1e-3;
  const std::vector<double> g{0.02, 0.004, 0.007, 0.001};
  const std::vector<double> blank{0.0, 1.0, 0.0, 0.0};
  double interference = 0.0;
  interference += 0.8 * 0.007;
  interference += 0.8 * 0.001;
  EXPECT_DOUBLE_EQ(SinrExact(g, 0, blank, radio),
                   0.8 * 0.02 / (interference + 1e-3));
}

TEST(Sinr, BoundIsExactWithAtMostOneBlanked) {
  const auto radio = UnitRadio();
  const std::vector<double> g{4.0, 0.5, 0.3, 0.2};
  const std::vector<int> nb{1, 2, 3};
  const std::vector<double> none{0.0, 0.0, 0.0, 0.0};
  const std::vector<double> one{0.0, 0.0, 1.0, 0.0};
  EXPECT_DOUBLE_EQ(SinrBound(g, 0, none, nb, radio), SinrExact(g, 0, none, radio));
  EXPECT_DOUBLE_EQ(SinrBound(g, 0, one, nb, radio), SinrExact(g, 0, one, radio));
}

TEST(Sinr, BoundRemovesOnlyTheStrongestBlanked) {
  const auto radio = UnitRadio();
  const std::vector<double> g{4.0, 0.5, 0.3};
  const std::vector<int> nb{1, 2};
  const std::vector<double> both{0.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(SinrBound(g, 0, both, nb, radio), 4.0 / (0.3 + 1.0));
}

TEST(Sinr, BoundNeverExceedsExact) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto radio = UnitRadio();
  const std::vector<int> nb{1, 2, 3, 4};
  for (int s = 0; s < 10000; ++s) {
    std::vector<double> g(5), b(5, 0.0);
    for (double& v : g) v = u(rng) * 3.0;
    for (int j = 1; j < 5; ++j) b[j] = u(rng) < 0.5 ? 1.0 : 0.0;
    EXPECT_LE(SinrBound(g, 0, b, nb, radio), SinrExact(g, 0, b, radio));
  }
}

// Two mutually interfering sectors with one user each on a single RB.
struct Pair {
  net::ChannelTensor channel{2, {1, 1}, 1};
  net::NeighborMap neighbors{std::vector<std::vector<int>>{{1}, {0}}};
  net::RadioConfig radio = UnitRadio();
  LinkAdaptation link;
};

TEST(Triples, ThresholdCrossingIsTheRateStep) {
  Pair p;
  const double g = Db(3.0);
  p.channel.gain(0, 0, 0, 0) = g;
  p.channel.gain(0, 0, 0, 1) = g / Db(1.0) - 1.0;
  p.channel.gain(1, 0, 0, 1) = 1.0;
  p.channel.gain(1, 0, 0, 0) = 0.0;
  const auto t = PrecomputeRateTriples(p.channel, p.radio, p.neighbors, p.link);
  EXPECT_EQ(t.base(0, 0, 0), 131.4);
  EXPECT_EQ(t.boosted(0, 0, 0, 0), 177.4);
  EXPECT_EQ(t.extra(0, 0, 0, 0), 177.4 - 131.4);
}

TEST(Triples, NegligibleNeighborGivesZeroExtra) {
  Pair p;
  p.channel.gain(0, 0, 0, 0) = 10.0;
  p.channel.gain(0, 0, 0, 1) = 1e-9;
  p.channel.gain(1, 0, 0, 1) = 10.0;
  p.channel.gain(1, 0, 0, 0) = 0.0;
  const auto t = PrecomputeRateTriples(p.channel, p.radio, p.neighbors, p.link);
  EXPECT_EQ(t.extra(0, 0, 0, 0), 0.0);
  EXPECT_EQ(t.extra(1, 0, 0, 0), 0.0);
}

TEST(RateBoundTest, ZeroOneAndAllBlanked) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto nb = net::NeighborMap::Circulant(5, {1, 2});
  for (int s = 0; s < 200; ++s) {
    net::ChannelTensor ch(5, {2, 2, 2, 2, 2}, 1);
    for (int k = 0; k < 5; ++k) {
      for (int m = 0; m < 2; ++m) {
        for (int j = 0; j < 5; ++j) ch.gain(k, m, 0, j) = (j == k ? 20.0 : 3.0) * u(rng);
      }
    }
    const auto radio = UnitRadio();
    const LinkAdaptation link;
    const auto t = PrecomputeRateTriples(ch, radio, nb, link);
    for (int k = 0; k < 5; ++k) {
      const auto list = nb.of(k);
      for (int m = 0; m < 2; ++m) {
        std::vector<double> slots(list.size(), 0.0);
        EXPECT_EQ(RateBound(t, k, m, 0, slots), t.base(k, m, 0));
        for (std::size_t i = 0; i < list.size(); ++i) {
          std::vector<double> one(list.size(), 0.0);
          one[i] = 1.0;
          std::vector<double> column(5, 0.0);
          column[list[i]] = 1.0;
          EXPECT_EQ(RateBound(t, k, m, 0, one),
                    link.Rate(SinrExact(ch.gains(k, m, 0), k, column, radio)));
        }
        std::vector<double> all(list.size(), 1.0);
        std::vector<double> column(5, 0.0);
        for (int j : list) column[j] = 1.0;
        EXPECT_LE(RateBound(t, k, m, 0, all),
                  link.Rate(SinrExact(ch.gains(k, m, 0), k, column, radio)));
      }
    }
  }
}

}  // namespace
}  // namespace icic::link
