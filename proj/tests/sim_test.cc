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


#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "icic/errors.h"
#include "icic/link_adapt.h"
#include "icic/net_model.h"
#include "icic/sim/baselines.h"
#include "icic/sim/config.h"
#include "icic/sim/metrics.h"
#include "icic/sim/report.h"
#include "icic/sim/simulation.h"

namespace icic::sim {
namespace {

SimConfig Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseConfig(in, "test.cfg");
}

TEST(Config, DefaultsFollowTheReferenceScenario) {
  const SimConfig c;
  EXPECT_EQ(c.radio.bs_power_dbm, 46.0);
  EXPECT_EQ(c.radio.noise_dbm_per_rb, -114.45);
  EXPECT_EQ(c.radio.bandwidth_hz, 10e6);
  EXPECT_EQ(c.scenario.window, 100.0);
  EXPECT_EQ(c.icic.iterations, 5);
}

TEST(Config, ParsesKeysAndComments) {
  const SimConfig c = Parse(
      "# comment\n"
      "scenario.drops = 3   # trailing\n"
      "\n"
      "icic.scheme = pfr\n"
      "metrics.rmin = 0, 0.5,1\n"
      "scheduler.alpha = 2\n");
  EXPECT_EQ(c.scenario.drops, 3);
  EXPECT_EQ(c.scheme, Scheme::kPfr);
  EXPECT_EQ(c.rmin, (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(c.weights.alpha, 2.0);
}

TEST(Config, UnknownKeyNamesTheLine) {
  try {
    Parse("scenario.drops = 1\n\nscenario.dorps = 2\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("test.cfg:3:"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("scenario.dorps"), std::string::npos);
  }
}

TEST(Config, BadValuesAreErrors) {
  EXPECT_THROW(Parse("scenario.drops = 0\n"), ConfigError);
  EXPECT_THROW(Parse("scenario.subframes = 0\n"), ConfigError);
  EXPECT_THROW(Parse("metrics.percentiles = 5, 100\n"), ConfigError);
  EXPECT_THROW(Parse("scenario.drops = two\n"), ConfigError);
  EXPECT_THROW(Parse("icic.scheme = reuse7\n"), ConfigError);
  EXPECT_THROW(Parse("just text\n"), ConfigError);
}

TEST(Config, CanonicalRoundTrip) {
  SimConfig c;
  c.scenario.seed = 99;
  c.scheme = Scheme::kReuse3;
  c.tradeoff_alphas = {0.0, 1.5};
  const SimConfig back = Parse(c.Canonical(true));
  EXPECT_EQ(back.Canonical(true), c.Canonical(true));
  EXPECT_EQ(Fnv1a(back.Canonical()), Fnv1a(c.Canonical()));
}

TEST(Config, HashIgnoresThreadCounts) {
  SimConfig a, b;
  b.scenario.threads = 4;
  EXPECT_EQ(a.Canonical(), b.Canonical());
  EXPECT_NE(a.Canonical(true), b.Canonical(true));
}

TEST(Fnv, KnownVectors) {
  EXPECT_EQ(Fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}

std::vector<int> UsedRbs(const core::BlankingMatrix& b, int k) {
  std::vector<int> used;
  for (int n = 0; n < b.rbs(); ++n) {
    if (b(k, n) == 0.0) used.push_back(n);
  }
  return used;
}

TEST(Baselines, Reuse1) {
  const auto b = BaselineBlanking(Scheme::kReuse1, 12, 7);
  for (double v : b.values()) EXPECT_EQ(v, 0.0);
}

TEST(Baselines, Reuse3SplitsFiftyRbs) {
  const auto b = BaselineBlanking(Scheme::kReuse3, 57, 50);
  const std::size_t sizes[] = {17, 17, 16};
  for (int k = 0; k < 57; ++k) {
    EXPECT_EQ(UsedRbs(b, k).size(), sizes[ReuseClass(k)]);
  }
  for (int n = 0; n < 50; ++n) {
    int cls = -1;
    for (int k = 0; k < 57; ++k) {
      if (b(k, n) != 0.0) continue;
      if (cls < 0) cls = ReuseClass(k);
      EXPECT_EQ(ReuseClass(k), cls) << "RB " << n;
    }
  }
}

TEST(Baselines, PfrInnerAndOuterBands) {
  const auto b = BaselineBlanking(Scheme::kPfr, 12, 50);
  EXPECT_EQ(PfrInnerBand(50, 0.6), 30);
  const std::size_t outer[] = {7, 7, 6};
  for (int k = 0; k < 12; ++k) {
    for (int n = 0; n < 30; ++n) EXPECT_EQ(b(k, n), 0.0);
    EXPECT_EQ(UsedRbs(b, k).size(), 30 + outer[ReuseClass(k)]);
  }
  for (int n = 30; n < 50; ++n) {
    int cls = -1;
    for (int k = 0; k < 12; ++k) {
      if (b(k, n) != 0.0) continue;
      if (cls < 0) cls = ReuseClass(k);
      EXPECT_EQ(ReuseClass(k), cls);
    }
  }
}

TEST(Baselines, TooFewRbs) {
  EXPECT_THROW(BaselineBlanking(Scheme::kReuse3, 3, 2), ConfigError);
  EXPECT_THROW(BaselineBlanking(Scheme::kProposed, 3, 9), ConfigError);
}

TEST(Metrics, PercentileInterpolates) {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
  EXPECT_DOUBLE_EQ(Percentile(v, 50.0), 3.0);
  EXPECT_DOUBLE_EQ(Percentile(v, 5.0), 1.2);
  EXPECT_DOUBLE_EQ(Percentile(v, 95.0), 4.8);
  EXPECT_THROW(Percentile({}, 5.0), ConfigError);
}

TEST(Metrics, OutageAndCdf) {
  const std::vector<double> v{0.3, 0.1, 0.2, 0.2};
  EXPECT_EQ(OutageProbability(v, 0.2), 0.25);
  EXPECT_EQ(OutageProbability(v, 0.25), 0.75);
  const auto cdf = EmpiricalCdf(v);
  ASSERT_EQ(cdf.size(), 4u);
  EXPECT_EQ(cdf.front().first, 0.1);
  EXPECT_EQ(cdf.back().second, 1.0);
}

TEST(Metrics, PmfSumsToOne) {
  const auto pmf = BlankedPmf({0, 1, 1, 3, 3, 3, 2}, 4);
  ASSERT_EQ(pmf.size(), 5u);
  double s = 0.0;
  for (double p : pmf) s += p;
  EXPECT_NEAR(s, 1.0, 1e-12);
  EXPECT_THROW(BlankedPmf({5}, 4), ConfigError);
}

// Small fixed report used for the golden files.
MetricsReport Synthetic() {
  MetricsReport r;
  r.scheme = "proposed";
  r.alpha = 1.0;
  r.seed = 7;
  r.drop_seeds = {11, 12};
  r.config_hash = 0x0123456789abcdefULL;
  r.percentile_levels = {5.0, 50.0, 95.0};
  r.rmin = {0.0, 0.05, 0.1};
  r.users = {{0, 0, 0, 0.125}, {0, 0, 1, 0.0625}, {0, 1, 0, 0.25},
             {1, 0, 0, 0.03125}, {1, 1, 0, 0.5}, {1, 1, 1, 0.0}};
  r.sectors = {{0, 0, 0.1875}, {0, 1, 0.25}, {1, 0, 0.03125}, {1, 1, 0.5}};
  r.blanked_counts = {0, 1, 1, 2};
  core::GapReport g;
  g.p_relaxed = 100.0;
  g.p_hat = 96.0;
  g.gap_percent = 4.0;
  g.upper_bound = 101.0;
  g.certified_gap_percent = 4.950495;
  g.binary_fraction = 0.9;
  g.binary_bound_percent = 54.545454;
  r.gaps = {{0, "0-9", g}, {1, "0-9", g}};
  OverheadRecord o;
  o.scheme = "proposed";
  o.input = {10, 4.0, 6.0, 5, 1, 8, 1e-3};
  o.report = core::ComputeOverhead(o.input);
  o.measured_bps = 123456.0;
  r.overhead = {o};
  FinalizeMetrics(r, 2);
  r.tradeoff = {{"proposed", 1.0, r.percentiles, r.aggregate},
                {"proposed", 2.0, {0.01, 0.1, 0.4}, 0.2}};
  return r;
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kFiles[] = {"user_throughput.csv", "cdf.csv",
                              "tradeoff.csv",        "outage.csv",
                              "blanked_pmf.csv",     "gaps.csv",
                              "overhead.csv",        "manifest.json"};

TEST(Report, GoldenFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "icic_golden_test";
  std::filesystem::remove_all(dir);
  EmitReports(Synthetic(), dir.string());
  for (const char* f : kFiles) {
    EXPECT_EQ(ReadFile(dir / f),
              ReadFile(std::filesystem::path(ICIC_GOLDEN_DIR) / f))
        << f;
  }
}

TEST(Report, EmptyReportWritesHeadersOnly) {
  MetricsReport r;
  r.scheme = "reuse1";
  r.percentile_levels = {5.0, 50.0, 95.0};
  r.rmin = {0.0, 0.1};
  FinalizeMetrics(r, 4);
  const auto dir = std::filesystem::temp_directory_path() / "icic_empty_test";
  std::filesystem::remove_all(dir);
  EmitReports(r, dir.string());
  for (const char* f : kFiles) {
    if (std::string(f) == "manifest.json") continue;
    const std::string text = ReadFile(dir / f);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1) << f;
  }
}

TEST(Report, UnwritableDirectoryIsAnError) {
  EXPECT_THROW(EmitReports(Synthetic(), "/proc/icic_no_such_dir/x"), Error);
}

SimConfig Tiny() {
  SimConfig c;
  c.scenario.sites = 4;
  c.scenario.users_per_sector = 2;
  c.scenario.rbs = 6;
  c.scenario.drops = 2;
  c.scenario.subframes = 20;
  c.rmin = {0.0, 0.01, 0.05, 0.1, 1.0};
  return c;
}

TEST(Simulation, SingleSubframeReuse1MatchesExactRates) {
  SimConfig c = Tiny();
  c.scenario.users_per_sector = 1;
  c.scenario.drops = 1;
  c.scenario.subframes = 1;
  c.scheme = Scheme::kReuse1;
  const MetricsReport r = RunScheme(c);
  const auto dims = net::NetworkDims::TriSector(4, 1, 6);
  const auto layout = net::GenerateLayout(dims, c.scenario.isd_m,
                                          c.scenario.tilt_deg, true);
  const auto radio = net::RadioConfig::FromTotalPower(
      c.radio.bs_power_dbm, 6, c.radio.noise_dbm_per_rb, c.radio.bandwidth_hz);
  net::ChannelModel model(layout, dims, radio, c.channel,
                          net::DeriveSeed(c.scenario.seed, 0));
  const auto ch = model.NextSubframe();
  const link::LinkAdaptation link;
  ASSERT_EQ(r.users.size(), 12u);
  for (const auto& u : r.users) {
    double kbps = 0.0;
    for (int n = 0; n < 6; ++n) {
      kbps += link.Rate(link::SinrAllOn(ch.gains(u.sector, 0, n), u.sector, radio));
    }
    EXPECT_DOUBLE_EQ(u.throughput, kbps * 1000.0 / c.radio.bandwidth_hz);
  }
}

TEST(Simulation, InvariantsHold) {
  for (Scheme s : {Scheme::kProposed, Scheme::kReuse3, Scheme::kPfr}) {
    SimConfig c = Tiny();
    c.scenario.rbs = 10;
    c.scheme = s;
    const MetricsReport r = RunScheme(c);
    for (const auto& sec : r.sectors) {
      double total = 0.0;
      for (const auto& u : r.users) {
        if (u.drop == sec.drop && u.sector == sec.sector) total += u.throughput;
      }
      EXPECT_EQ(total, sec.throughput);
    }
    for (std::size_t i = 1; i < r.outage.size(); ++i) {
      EXPECT_LE(r.outage[i - 1], r.outage[i]);
    }
    double pmf = 0.0;
    for (double p : r.blanked_pmf) pmf += p;
    EXPECT_NEAR(pmf, 1.0, 1e-12);
    ASSERT_EQ(r.percentiles.size(), 3u);
    EXPECT_LE(r.percentiles[0], r.percentiles[1]);
    EXPECT_LE(r.percentiles[1], r.percentiles[2]);
    const auto cdf = EmpiricalCdf(Throughputs(r));
    for (std::size_t i = 1; i < cdf.size(); ++i) {
      EXPECT_LE(cdf[i - 1].second, cdf[i].second);
      EXPECT_LE(cdf[i - 1].first, cdf[i].first);
    }
  }
}

TEST(Simulation, ProposedReportsGapsAndOverhead) {
  SimConfig c = Tiny();
  c.icic.period = 5;
  const MetricsReport r = RunScheme(c);
  EXPECT_EQ(r.gaps.size(), 2u * 4u);
  ASSERT_EQ(r.overhead.size(), 1u);
  // Every sector has the same degree, so the count matches the formula.
  EXPECT_NEAR(r.overhead[0].measured_bps, r.overhead[0].report.distributed_bps,
              1e-9 * r.overhead[0].report.distributed_bps);
  for (const auto& g : r.gaps) EXPECT_GE(g.gap.gap_percent, 0.0);
}

TEST(Simulation, EstimationDelayNeverHelps) {
  SimConfig c = Tiny();
  c.scheme = Scheme::kReuse1;
  c.channel.fading_correlation = 0.5;
  const double fresh = RunScheme(c).aggregate;
  c.estimation_delay = 4;
  EXPECT_LE(RunScheme(c).aggregate, fresh * 1.05);
}

TEST(Simulation, SameSeedSameBytes) {
  SimConfig c = Tiny();
  c.tradeoff_alphas = {0.0, 2.0};
  const auto a = std::filesystem::temp_directory_path() / "icic_det_a";
  const auto b = std::filesystem::temp_directory_path() / "icic_det_b";
  EmitReports(RunSimulation(c), a.string());
  c.scenario.threads = 2;
  EmitReports(RunSimulation(c), b.string());
  for (const char* f : kFiles) EXPECT_EQ(ReadFile(a / f), ReadFile(b / f)) << f;
  EXPECT_EQ(RunSimulation(c).tradeoff.size(), 3u);
}

}  // namespace
}  // namespace icic::sim
