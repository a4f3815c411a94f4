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


#include "icic/sim/config.h"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>

#include "icic/errors.h"

namespace icic::sim {
namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double ParseDouble(const std::string& v) {
  if (v.empty()) throw ConfigError("expected a number");
  errno = 0;
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (*end != '\0' || errno == ERANGE || !std::isfinite(d)) {
    throw ConfigError("invalid number '" + v + "'");
  }
  return d;
}

long ParseInt(const std::string& v) {
  if (v.empty()) throw ConfigError("expected an integer");
  errno = 0;
  char* end = nullptr;
  const long i = std::strtol(v.c_str(), &end, 10);
  if (*end != '\0' || errno == ERANGE) {
    throw ConfigError("invalid integer '" + v + "'");
  }
  return i;
}

std::uint64_t ParseU64(const std::string& v) {
  if (v.empty() || v[0] == '-') throw ConfigError("invalid seed '" + v + "'");
  errno = 0;
  char* end = nullptr;
  const unsigned long long u = std::strtoull(v.c_str(), &end, 10);
  if (*end != '\0' || errno == ERANGE) {
    throw ConfigError("invalid seed '" + v + "'");
  }
  return u;
}

bool ParseBool(const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("invalid boolean '" + v + "'");
}

std::vector<double> ParseList(const std::string& v) {
  std::vector<double> out;
  if (v.empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseDouble(Trim(item)));
  return out;
}

std::string Num(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

std::string List(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + Num(v[i]);
  return s;
}

std::string Bool(bool b) { return b ? "true" : "false"; }

struct Key {
  const char* name;
  std::function<void(SimConfig&, const std::string&)> set;
  std::function<std::string(const SimConfig&)> get;
};

#define ICIC_KEY(name, field, parse, show)                               \
  Key {                                                                  \
    name, [](SimConfig& c, const std::string& v) { c.field = parse(v); }, \
        [](const SimConfig& c) { return show(c.field); }                 \
  }

int ToInt(const std::string& v) { return static_cast<int>(ParseInt(v)); }
std::string IntStr(int i) { return std::to_string(i); }
std::string U64Str(std::uint64_t u) { return std::to_string(u); }
std::string Str(const std::string& s) { return s; }

NeighborMode ParseNeighborMode(const std::string& v) {
  if (v == "geometric") return NeighborMode::kGeometric;
  if (v == "strongest") return NeighborMode::kStrongest;
  throw ConfigError("unknown neighbor mode '" + v + "'");
}
std::string NeighborModeStr(NeighborMode m) {
  return m == NeighborMode::kGeometric ? "geometric" : "strongest";
}

InitMode ParseInitMode(const std::string& v) {
  if (v == "zero") return InitMode::kZero;
  if (v == "random") return InitMode::kRandom;
  if (v == "warm") return InitMode::kWarm;
  throw ConfigError("unknown init mode '" + v + "'");
}
std::string InitModeStr(InitMode m) {
  switch (m) {
    case InitMode::kZero: return "zero";
    case InitMode::kRandom: return "random";
    case InitMode::kWarm: return "warm";
  }
  return "warm";
}

sched::WeightPolicy::Mode ParseWeightMode(const std::string& v) {
  if (v == "alpha") return sched::WeightPolicy::Mode::kAlphaFair;
  if (v == "linear") return sched::WeightPolicy::Mode::kLinear;
  throw ConfigError("unknown weight mode '" + v + "'");
}
std::string WeightModeStr(sched::WeightPolicy::Mode m) {
  return m == sched::WeightPolicy::Mode::kAlphaFair ? "alpha" : "linear";
}

const std::vector<Key>& Keys() {
  static const std::vector<Key> keys = {
      ICIC_KEY("scenario.sites", scenario.sites, ToInt, IntStr),
      ICIC_KEY("scenario.users_per_sector", scenario.users_per_sector, ToInt,
               IntStr),
      ICIC_KEY("scenario.rbs", scenario.rbs, ToInt, IntStr),
      ICIC_KEY("scenario.isd_m", scenario.isd_m, ParseDouble, Num),
      ICIC_KEY("scenario.tilt_deg", scenario.tilt_deg, ParseDouble, Num),
      ICIC_KEY("scenario.wraparound", scenario.wraparound, ParseBool, Bool),
      ICIC_KEY("scenario.neighbors", scenario.neighbors, ParseNeighborMode,
               NeighborModeStr),
      ICIC_KEY("scenario.neighbor_count", scenario.neighbor_count, ToInt,
               IntStr),
      ICIC_KEY("scenario.seed", scenario.seed, ParseU64, U64Str),
      ICIC_KEY("scenario.drops", scenario.drops, ToInt, IntStr),
      ICIC_KEY("scenario.subframes", scenario.subframes, ToInt, IntStr),
      ICIC_KEY("scenario.window", scenario.window, ParseDouble, Num),
      ICIC_KEY("scenario.threads", scenario.threads, ToInt, IntStr),
      ICIC_KEY("radio.bs_power_dbm", radio.bs_power_dbm, ParseDouble, Num),
      ICIC_KEY("radio.noise_dbm_per_rb", radio.noise_dbm_per_rb, ParseDouble,
               Num),
      ICIC_KEY("radio.bandwidth_hz", radio.bandwidth_hz, ParseDouble, Num),
      ICIC_KEY("radio.sinr_margin_db", radio.sinr_margin_db, ParseDouble, Num),
      ICIC_KEY("radio.amc_table", radio.amc_table, Trim, Str),
      ICIC_KEY("channel.pathloss_a_db", channel.pathloss_a_db, ParseDouble,
               Num),
      ICIC_KEY("channel.pathloss_b", channel.pathloss_b, ParseDouble, Num),
      ICIC_KEY("channel.shadowing_sigma_db", channel.shadowing_sigma_db,
               ParseDouble, Num),
      ICIC_KEY("channel.shadowing_site_correlation",
               channel.shadowing_site_correlation, ParseDouble, Num),
      ICIC_KEY("channel.bs_antenna_gain_dbi", channel.bs_antenna_gain_dbi,
               ParseDouble, Num),
      ICIC_KEY("channel.ue_antenna_gain_dbi", channel.ue_antenna_gain_dbi,
               ParseDouble, Num),
      ICIC_KEY("channel.feeder_loss_db", channel.feeder_loss_db, ParseDouble,
               Num),
      ICIC_KEY("channel.bs_height_m", channel.bs_height_m, ParseDouble, Num),
      ICIC_KEY("channel.ue_height_m", channel.ue_height_m, ParseDouble, Num),
      ICIC_KEY("channel.min_distance_m", channel.min_distance_m, ParseDouble,
               Num),
      ICIC_KEY("channel.fast_fading", channel.fast_fading, ParseBool, Bool),
      ICIC_KEY("channel.fading_correlation", channel.fading_correlation,
               ParseDouble, Num),
      ICIC_KEY("channel.estimation_delay", estimation_delay, ToInt, IntStr),
      ICIC_KEY("scheduler.weights", weights.mode, ParseWeightMode,
               WeightModeStr),
      ICIC_KEY("scheduler.alpha", weights.alpha, ParseDouble, Num),
      ICIC_KEY("scheduler.beta", weights.beta, ParseDouble, Num),
      ICIC_KEY("icic.scheme", scheme, ParseScheme, SchemeName),
      ICIC_KEY("icic.iterations", icic.iterations, ToInt, IntStr),
      ICIC_KEY("icic.step", icic.step, ParseDouble, Num),
      ICIC_KEY("icic.period", icic.period, ToInt, IntStr),
      ICIC_KEY("icic.runs", icic.runs, ToInt, IntStr),
      ICIC_KEY("icic.quant_bits", icic.quant_bits, ToInt, IntStr),
      ICIC_KEY("icic.normalize_weights", icic.normalize_weights, ParseBool,
               Bool),
      ICIC_KEY("icic.quantize_exchange", icic.quantize_exchange, ParseBool,
               Bool),
      ICIC_KEY("icic.certify", icic.certify, ParseBool, Bool),
      ICIC_KEY("icic.threads", icic.threads, ToInt, IntStr),
      ICIC_KEY("icic.init", init, ParseInitMode, InitModeStr),
      ICIC_KEY("icic.pfr_inner_fraction", pfr_inner_fraction, ParseDouble,
               Num),
      ICIC_KEY("metrics.rmin", rmin, ParseList, List),
      ICIC_KEY("metrics.percentiles", percentiles, ParseList, List),
      ICIC_KEY("metrics.tradeoff_alphas", tradeoff_alphas, ParseList, List),
  };
  return keys;
}

#undef ICIC_KEY

}  // namespace

std::string SchemeName(Scheme s) {
  switch (s) {
    case Scheme::kProposed: return "proposed";
    case Scheme::kReuse1: return "reuse1";
    case Scheme::kReuse3: return "reuse3";
    case Scheme::kPfr: return "pfr";
  }
  return "proposed";
}

Scheme ParseScheme(const std::string& name) {
  if (name == "proposed") return Scheme::kProposed;
  if (name == "reuse1") return Scheme::kReuse1;
  if (name == "reuse3") return Scheme::kReuse3;
  if (name == "pfr") return Scheme::kPfr;
  throw ConfigError("unknown scheme '" + name + "'");
}

void SimConfig::Validate() const {
  const auto& s = scenario;
  if (s.sites < 1) throw ConfigError("scenario.sites must be >= 1");
  if (s.users_per_sector < 1) {
    throw ConfigError("scenario.users_per_sector must be >= 1");
  }
  if (s.rbs < 1) throw ConfigError("scenario.rbs must be >= 1");
  if (!(s.isd_m > 0.0)) throw ConfigError("scenario.isd_m must be > 0");
  if (s.neighbor_count < 1) {
    throw ConfigError("scenario.neighbor_count must be >= 1");
  }
  if (s.drops < 1) throw ConfigError("scenario.drops must be >= 1");
  if (s.subframes < 1) throw ConfigError("scenario.subframes must be >= 1");
  if (!(s.window >= 1.0)) throw ConfigError("scenario.window must be >= 1");
  if (s.threads < 1) throw ConfigError("scenario.threads must be >= 1");
  if (!(radio.bandwidth_hz > 0.0)) {
    throw ConfigError("radio.bandwidth_hz must be > 0");
  }
  if (radio.sinr_margin_db < 0.0) {
    throw ConfigError("radio.sinr_margin_db must be >= 0");
  }
  channel.Validate();
  if (estimation_delay < 0) {
    throw ConfigError("channel.estimation_delay must be >= 0");
  }
  weights.Validate();
  icic.Validate();
  if (!(pfr_inner_fraction >= 0.0 && pfr_inner_fraction <= 1.0)) {
    throw ConfigError("icic.pfr_inner_fraction must lie in [0, 1]");
  }
  if ((scheme == Scheme::kReuse3 && s.rbs < 3) ||
      (scheme == Scheme::kPfr &&
       s.rbs - static_cast<int>(std::ceil(pfr_inner_fraction * s.rbs)) < 3)) {
    throw ConfigError("too few RBs for the reuse-3 band split");
  }
  for (double r : rmin) {
    if (r < 0.0) throw ConfigError("metrics.rmin values must be >= 0");
  }
  for (double p : percentiles) {
    if (!(p > 0.0 && p < 100.0)) {
      throw ConfigError("metrics.percentiles must lie in (0, 100)");
    }
  }
  for (double a : tradeoff_alphas) {
    if (a < 0.0) throw ConfigError("metrics.tradeoff_alphas must be >= 0");
  }
}

std::string SimConfig::Canonical(bool with_threads) const {
  std::string out;
  for (const Key& k : Keys()) {
    const std::string name = k.name;
    if (!with_threads && name.ends_with(".threads")) continue;
    out += name + " = " + k.get(*this) + "\n";
  }
  return out;
}

SimConfig ParseConfig(std::istream& in, const std::string& source) {
  SimConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = Trim(line);
    if (text.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + "expected 'section.key = value'");
    }
    const std::string key = Trim(std::string_view(text).substr(0, eq));
    const std::string value = Trim(std::string_view(text).substr(eq + 1));
    const Key* match = nullptr;
    for (const Key& k : Keys()) {
      if (key == k.name) match = &k;
    }
    if (match == nullptr) throw ConfigError(where + "unknown key '" + key + "'");
    try {
      match->set(cfg, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  cfg.Validate();
  return cfg;
}

SimConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return ParseConfig(in, path);
}

std::uint64_t Fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace icic::sim
