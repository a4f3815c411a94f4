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


#include "icic/sim/report.h"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "icic/errors.h"

namespace icic::sim {
namespace {

std::string Fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string Hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

void WriteUserThroughput(std::ostream& out, const MetricsReport& r) {
  out << "scheme,drop,sector,user,throughput_bps_hz\n";
  for (const auto& u : r.users) {
    out << r.scheme << ',' << u.drop << ',' << u.sector << ',' << u.user << ','
        << Fmt(u.throughput) << '\n';
  }
}

void WriteCdf(std::ostream& out, const MetricsReport& r) {
  out << "scheme,throughput_bps_hz,cdf\n";
  for (const auto& [x, f] : EmpiricalCdf(Throughputs(r))) {
    out << r.scheme << ',' << Fmt(x) << ',' << Fmt(f) << '\n';
  }
}

void WriteTradeoff(std::ostream& out, const MetricsReport& r) {
  out << "scheme,alpha";
  for (double p : r.percentile_levels) out << ",p" << Fmt(p);
  out << ",aggregate_sector_bps_hz\n";
  for (const auto& t : r.tradeoff) {
    if (t.percentiles.size() != r.percentile_levels.size()) continue;
    out << t.scheme << ',' << Fmt(t.alpha);
    for (double v : t.percentiles) out << ',' << Fmt(v);
    out << ',' << Fmt(t.aggregate) << '\n';
  }
}

void WriteOutage(std::ostream& out, const MetricsReport& r) {
  out << "scheme,rmin_bps_hz,outage\n";
  for (std::size_t i = 0; i < r.outage.size(); ++i) {
    out << r.scheme << ',' << Fmt(r.rmin[i]) << ',' << Fmt(r.outage[i]) << '\n';
  }
}

void WriteBlankedPmf(std::ostream& out, const MetricsReport& r) {
  out << "scheme,blanked_rbs,probability\n";
  for (std::size_t i = 0; i < r.blanked_pmf.size(); ++i) {
    out << r.scheme << ',' << i << ',' << Fmt(r.blanked_pmf[i]) << '\n';
  }
}

void WriteGaps(std::ostream& out, const MetricsReport& r) {
  core::WriteGapHeader(out);
  for (const auto& g : r.gaps) core::WriteGapRow(out, g.subframe, g.rb_set, g.gap);
}

void WriteOverhead(std::ostream& out, const MetricsReport& r) {
  core::WriteOverheadHeader(out);
  for (const auto& o : r.overhead) {
    core::WriteOverheadRow(out, o.scheme, o.input, o.report, o.measured_bps);
  }
}

void WriteManifest(std::ostream& out, const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["scheme"] = r.scheme;
  j["alpha"] = r.alpha;
  j["config_hash_fnv1a"] = Hex(r.config_hash);
  j["seed"] = r.seed;
  j["drop_seeds"] = r.drop_seeds;
  j["cdf_pooling"] = "users pooled across drops";
  j["throughput_unit"] = "bit/s/Hz";
  j["files"] = {"user_throughput.csv", "cdf.csv",  "tradeoff.csv",
                "outage.csv",          "blanked_pmf.csv", "gaps.csv",
                "overhead.csv"};
  out << j.dump(2) << '\n';
}

void EmitReports(const MetricsReport& r, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create '" + dir + "': " + ec.message());
  using Writer = void (*)(std::ostream&, const MetricsReport&);
  const std::pair<const char*, Writer> files[] = {
      {"user_throughput.csv", WriteUserThroughput},
      {"cdf.csv", WriteCdf},
      {"tradeoff.csv", WriteTradeoff},
      {"outage.csv", WriteOutage},
      {"blanked_pmf.csv", WriteBlankedPmf},
      {"gaps.csv", WriteGaps},
      {"overhead.csv", WriteOverhead},
      {"manifest.json", WriteManifest},
  };
  for (const auto& [name, write] : files) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "': " + std::strerror(errno));
    write(out, r);
    out.flush();
    if (!out) throw Error("cannot write '" + path + "': " + std::strerror(errno));
  }
}

}  // namespace icic::sim
