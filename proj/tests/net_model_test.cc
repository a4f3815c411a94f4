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
#include "icic/net_model.h"

namespace icic::net {
namespace {

TEST(Layout, FullNetworkHasSixFirstTierNeighbors) {
  const auto dims = NetworkDims::TriSector(19, 10, 50);
  const Layout layout = GenerateLayout(dims, 500.0);
  EXPECT_EQ(layout.sites.size(), 19u);
  EXPECT_EQ(layout.num_sectors(), 57);
  const NeighborMap nb = GeometricNeighbors(layout);
  for (int k = 0; k < 57; ++k) EXPECT_EQ(nb.degree(k), 6) << k;
}

TEST(Layout, SingleSiteNeighborsAreCoLocatedSectors) {
  const auto dims = NetworkDims::TriSector(1, 1, 1);
  const Layout layout = GenerateLayout(dims, 500.0);
  EXPECT_EQ(layout.sites.size(), 1u);
  const NeighborMap nb = GeometricNeighbors(layout);
  for (int k = 0; k < 3; ++k) {
    ASSERT_EQ(nb.degree(k), 2);
    for (int j : nb.of(k)) EXPECT_NE(j, k);
  }
}

TEST(Layout, TwelveSectorMapIsSymmetric) {
  const auto dims = NetworkDims::TriSector(4, 2, 2);
  const NeighborMap nb = GeometricNeighbors(GenerateLayout(dims, 500.0));
  const int degree = nb.common_degree();
  EXPECT_GT(degree, 0);
  for (int k = 0; k < 12; ++k) {
    EXPECT_EQ(nb.degree(k), degree);
    for (int j = 0; j < 12; ++j) {
      EXPECT_EQ(nb.IndexOf(k, j) >= 0, nb.IndexOf(j, k) >= 0) << k << "," << j;
    }
  }
}

TEST(Layout, RejectsSiteCountsWithoutTorus) {
  EXPECT_THROW(GenerateLayout(NetworkDims::TriSector(2, 1, 1), 500.0),
               ConfigError);
}

TEST(NeighborMap, RejectsAsymmetricLists) {
  using Lists = std::vector<std::vector<int>>;
  EXPECT_THROW(NeighborMap(Lists{{1}, {}}), ConfigError);
  EXPECT_THROW(NeighborMap(Lists{{0}}), ConfigError);
}

TEST(NeighborMap, CirculantDegrees) {
  const auto nb = NeighborMap::Circulant(6, {1});
  EXPECT_EQ(nb.common_degree(), 2);
  EXPECT_GE(nb.IndexOf(0, 5), 0);
  EXPECT_EQ(nb.IndexOf(0, 3), -1);
}

TEST(NeighborMap, StrongestInterferersAreSymmetrised) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> c(9, std::vector<double>(9));
  for (auto& row : c) {
    for (double& v : row) v = u(rng);
  }
  const NeighborMap nb = StrongestInterferers(c, 2);
  for (int k = 0; k < 9; ++k) {
    EXPECT_GE(nb.degree(k), 2);
    for (int j : nb.of(k)) EXPECT_GE(nb.IndexOf(j, k), 0);
  }
}

TEST(Antenna, BoresightIsZeroDb) {
  EXPECT_DOUBLE_EQ(AntennaPatternDb(0.0, 12.0, 12.0), 0.0);
}

TEST(Antenna, SeventyDegreesIsMinusTwelve) {
  EXPECT_DOUBLE_EQ(AntennaPatternDb(70.0, 12.0, 12.0), -12.0);
}

TEST(Antenna, BackLobeIsClamped) {
  EXPECT_DOUBLE_EQ(AntennaPatternDb(180.0, 12.0, 12.0), -20.0);
}

TEST(Channel, DoublingDistanceFollowsSlope) {
  ChannelConfig cfg;
  for (double d : {30.0, 100.0, 400.0}) {
    const double ratio =
        DbToLinear(-(PathlossDb(2.0 * d, cfg) - PathlossDb(d, cfg)));
    EXPECT_NEAR(ratio, std::pow(2.0, -cfg.pathloss_b / 10.0), 1e-12);
  }
}

TEST(Channel, MirroredUsersHaveEqualServingGain) {
  const auto dims = NetworkDims::TriSector(1, 1, 1);
  const Layout layout = GenerateLayout(dims, 500.0, 12.0, false);
  ChannelConfig cfg;
  cfg.shadowing_sigma_db = 0.0;
  cfg.fast_fading = false;
  const int k = 0;
  const double b = layout.boresight_deg[k] * M_PI / 180.0;
  const Point site = layout.sites[layout.sector_site[k]];
  auto at = [&](double off) {
    return Point{site.x + 120.0 * std::cos(b + off),
                 site.y + 120.0 * std::sin(b + off)};
  };
  EXPECT_NEAR(LinkGainDb(layout, k, at(0.3), cfg),
              LinkGainDb(layout, k, at(-0.3), cfg), 1e-9);
}

TEST(Channel, SameSeedGivesIdenticalTensors) {
  const auto dims = NetworkDims::TriSector(4, 3, 5);
  const Layout layout = GenerateLayout(dims, 500.0);
  const auto radio = RadioConfig::FromTotalPower(46.0, 5, -114.45, 10e6);
  const ChannelConfig cfg;
  EXPECT_EQ(DrawChannels(layout, dims, radio, cfg, 42),
            DrawChannels(layout, dims, radio, cfg, 42));
  EXPECT_FALSE(DrawChannels(layout, dims, radio, cfg, 42) ==
               DrawChannels(layout, dims, radio, cfg, 43));
}

TEST(Channel, DropFillsEverySectorExactly) {
  const auto dims = NetworkDims::TriSector(4, 3, 2);
  const Layout layout = GenerateLayout(dims, 500.0);
  const auto radio = RadioConfig::FromTotalPower(46.0, 2, -114.45, 10e6);
  ChannelModel model(layout, dims, radio, ChannelConfig{}, 5);
  for (int k = 0; k < 12; ++k) {
    EXPECT_EQ(model.drop().users_of[k].size(), 3u);
    for (int u : model.drop().users_of[k]) EXPECT_EQ(model.drop().serving[u], k);
  }
  const ChannelTensor t = model.NextSubframe();
  for (int k = 0; k < 12; ++k) {
    for (int m = 0; m < 3; ++m) {
      for (int j = 0; j < 12; ++j) EXPECT_GT(t.gain(k, m, 0, j), 0.0);
    }
  }
}

TEST(Association, SingleSectorTakesEveryone) {
  EXPECT_EQ(AssociateUsers({{1e-9}, {1e-12}}, 1.0, 1e-13),
            (std::vector<int>{0, 0}));
}

TEST(Association, DominantGainWins) {
  std::vector<double> g(5, 1e-10);
  g[3] = 1e-9;
  EXPECT_EQ(AssociateUsers({g}, 1.0, 1e-13), (std::vector<int>{3}));
}

TEST(Association, MatchesBruteForceScan) {
  std::mt19937_64 rng(11);
  std::lognormal_distribution<double> g(-20.0, 3.0);
  std::vector<std::vector<double>> gains(200, std::vector<double>(12));
  for (auto& row : gains) {
    for (double& v : row) v = g(rng);
  }
  const auto serving = AssociateUsers(gains, 0.8, 1e-14);
  for (std::size_t u = 0; u < gains.size(); ++u) {
    int best = 0;
    double best_sinr = -1.0;
    for (int j = 0; j < 12; ++j) {
      double interference = 0.0;
      for (int i = 0; i < 12; ++i) {
        if (i != j) interference += gains[u][i];
      }
      const double s = 0.8 * gains[u][j] / (0.8 * interference + 1e-14);
      if (s > best_sinr) {
        best_sinr = s;
        best = j;
      }
    }
    EXPECT_EQ(serving[u], best);
  }
}

TEST(Radio, PowerIsSplitOverRbs) {
  const auto r = RadioConfig::FromTotalPower(46.0, 50, -114.45, 10e6);
  EXPECT_NEAR(r.tx_power_per_rb_w, std::pow(10.0, 1.6) / 50.0, 1e-12);
  EXPECT_NEAR(r.noise_per_rb_w, std::pow(10.0, (-114.45 - 30.0) / 10.0),
              1e-27);
}

TEST(Dims, ValidateRejectsBadCounts) {
  EXPECT_THROW(NetworkDims::TriSector(0, 1, 1).Validate(true), ConfigError);
  EXPECT_THROW(NetworkDims::TriSector(1, 0, 1).Validate(true), ConfigError);
}

TEST(Tensor, CsvHeader) {
  ChannelTensor t(1, {1}, 1);
  t.gain(0, 0, 0, 0) = 0.5;
  std::ostringstream out;
  t.ExportCsv(out);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "m,n,k,k_tilde,gain_linear");
}

TEST(Seeds, DerivedStreamsDiffer) {
  EXPECT_EQ(DeriveSeed(1, 2), DeriveSeed(1, 2));
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(1, 3));
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(2, 2));
}

}  // namespace
}  // namespace icic::net
