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


// Command-line driver for the simulator and the check suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "icic/checks.h"
#include "icic/errors.h"
#include "icic/sim/config.h"
#include "icic/sim/report.h"
#include "icic/sim/simulation.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAcceptance = 3;

struct SimulateArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> scheme;
  std::optional<double> alpha;
  std::optional<int> niter;
  std::optional<int> rho;
};

int Simulate(const SimulateArgs& a) {
  icic::sim::SimConfig cfg = icic::sim::LoadConfig(a.config);
  if (a.seed) cfg.scenario.seed = *a.seed;
  if (a.scheme) cfg.scheme = icic::sim::ParseScheme(*a.scheme);
  if (a.alpha) cfg.weights = icic::sched::WeightPolicy::AlphaFair(*a.alpha);
  if (a.niter) cfg.icic.iterations = *a.niter;
  if (a.rho) cfg.icic.period = *a.rho;
  cfg.Validate();
  const auto report = icic::sim::RunSimulation(cfg);
  icic::sim::EmitReports(report, a.out);
  std::printf("%s: %zu users, mean sector throughput %.4f bit/s/Hz, "
              "reports in %s\n",
              report.scheme.c_str(), report.users.size(), report.aggregate,
              a.out.c_str());
  return 0;
}

int Verify(std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : icic::checks::RunVerify(seed)) {
    std::printf("%s\n", icic::checks::FormatResult(r).c_str());
    ok = ok && r.pass;
  }
  return ok ? 0 : kExitAcceptance;
}

int GapBench(const icic::checks::GapBenchOptions& opt, const std::string& out) {
  const auto bench = icic::checks::RunGapBench(opt);
  if (out.empty()) {
    icic::checks::WriteGapBench(std::cout, bench);
  } else {
    std::ofstream f(out);
    if (!f) throw icic::Error("cannot write '" + out + "'");
    icic::checks::WriteGapBench(f, bench);
  }
  const auto c1 = icic::checks::CheckOptimalityGap(bench);
  const auto c2 = icic::checks::CheckConvergence(bench);
  std::printf("%s\n%s\n", icic::checks::FormatResult(c1).c_str(),
              icic::checks::FormatResult(c2).c_str());
  return c1.pass && c2.pass ? 0 : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed ICIC scheduler simulator"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run a system-level simulation");
  simulate->add_option("--config", sim.config, "Config file")->required();
  simulate->add_option("--out", sim.out, "Output directory")->required();
  simulate->add_option("--seed", sim.seed, "Base seed");
  simulate->add_option("--scheme", sim.scheme, "proposed|reuse1|reuse3|pfr");
  simulate->add_option("--alpha", sim.alpha, "Alpha-fair exponent");
  simulate->add_option("--niter", sim.niter, "Master iterations");
  simulate->add_option("--rho", sim.rho, "Sub-frames between executions");

  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the oracle and property suites");
  verify->add_option("--seed", verify_seed, "Seed");

  icic::checks::GapBenchOptions bench;
  std::string bench_out;
  std::string topology = "hex";
  auto* gapbench = app.add_subcommand("gapbench", "Optimality gap benchmark");
  gapbench->add_option("--instances", bench.instances, "Instance count");
  gapbench->add_option("--seed", bench.seed, "First instance seed");
  gapbench->add_option("--iterations", bench.iterations, "Master iterations");
  gapbench->add_option("--topology", topology, "hex|ring")
      ->check(CLI::IsMember({"hex", "ring"}));
  gapbench->add_option("--out", bench_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*simulate) return Simulate(sim);
    if (*verify) return Verify(verify_seed);
    if (*gapbench) {
      if (bench.instances < 1 || bench.iterations < 1) {
        throw icic::ConfigError("instances and iterations must be >= 1");
      }
      if (topology == "ring") {
        bench.desk.topology = icic::oracle::DeskOptions::Topology::kRing;
      }
      return GapBench(bench, bench_out);
    }
  } catch (const icic::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
