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

#include "icic/net_model.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "icic/errors.h"

namespace icic::net {
namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

double Norm(Point p) { return std::hypot(p.x, p.y); }

Point Add(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

Point Scale(Point a, double s) { return {a.x * s, a.y * s}; }

// Finds i >= 1, j >= 0 with i*i + i*j + j*j == n.
bool ClusterShift(int n, int* i_out, int* j_out) {
  for (int i = 1; i * i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (i * i + i * j + j * j == n) {
        *i_out = i;
        *j_out = j;
        return true;
      }
    }
  }
  return false;
}

double WrapAngleDeg(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a <= -180.0) a += 360.0;
  if (a > 180.0) a -= 360.0;
  return a;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

double LinearToDb(double linear) { return 10.0 * std::log10(linear); }

double DbmToWatt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream) {
  return SplitMix64(base ^ SplitMix64(stream + 1));
}

NetworkDims NetworkDims::TriSector(int sites, int users_per_sector, int rbs) {
  NetworkDims dims;
  dims.sites = sites;
  dims.sectors = 3 * sites;
  dims.users.assign(static_cast<std::size_t>(std::max(dims.sectors, 0)),
                    users_per_sector);
  dims.rbs = rbs;
  return dims;
}

void NetworkDims::Validate(bool tri_sector) const {
  if (sectors < 1) throw ConfigError("sector count must be >= 1");
  if (rbs < 1) throw ConfigError("RB count must be >= 1");
  if (static_cast<int>(users.size()) != sectors) {
    throw ConfigError("need one user count per sector");
  }
  for (int k = 0; k < sectors; ++k) {
    if (users[k] < 1) {
      throw ConfigError("sector " + std::to_string(k) + " has no users");
    }
  }
  if (tri_sector) {
    if (sectors % 3 != 0) {
      throw ConfigError("tri-sector layout needs K divisible by 3, got K=" +
                        std::to_string(sectors));
    }
    if (sites * 3 != sectors) {
      throw ConfigError("tri-sector layout needs sites*3 == K");
    }
  }
}

int NetworkDims::TotalUsers() const {
  int total = 0;
  for (int m : users) total += m;
  return total;
}

double NetworkDims::MeanUsers() const {
  return sectors == 0 ? 0.0 : static_cast<double>(TotalUsers()) / sectors;
}

RadioConfig RadioConfig::FromTotalPower(double bs_power_dbm, int rbs,
                                        double noise_dbm_per_rb,
                                        double bandwidth_hz) {
  RadioConfig radio;
  radio.tx_power_per_rb_w = DbmToWatt(bs_power_dbm) / rbs;
  radio.noise_per_rb_w = DbmToWatt(noise_dbm_per_rb);
  radio.bandwidth_hz = bandwidth_hz;
  return radio;
}

void RadioConfig::Validate() const {
  if (!(tx_power_per_rb_w > 0.0)) throw ConfigError("P_C must be > 0");
  if (!(noise_per_rb_w > 0.0)) throw ConfigError("P_N must be > 0");
  if (!(bandwidth_hz > 0.0)) throw ConfigError("bandwidth must be > 0");
}

Point Layout::Displacement(Point from, Point to) const {
  Point d{to.x - from.x, to.y - from.y};
  if (!wraparound) return d;
  // Reduce to the fundamental cell, then check the neighbouring images.
  const Point a = wrap[0];
  const Point b = wrap[1];
  const double det = a.x * b.y - a.y * b.x;
  const double s = (d.x * b.y - d.y * b.x) / det;
  const double t = (a.x * d.y - a.y * d.x) / det;
  const Point base =
      Add(d, Add(Scale(a, -std::round(s)), Scale(b, -std::round(t))));
  Point best = base;
  double best_norm = Norm(base);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      const Point c = Add(base, Add(Scale(a, i), Scale(b, j)));
      const double norm = Norm(c);
      if (norm < best_norm - 1e-9) {
        best = c;
        best_norm = norm;
      }
    }
  }
  return best;
}

Layout GenerateLayout(const NetworkDims& dims, double isd_m, double tilt_deg,
                      bool wraparound) {
  dims.Validate(/*tri_sector=*/true);
  if (!(isd_m > 0.0)) throw ConfigError("inter-site distance must be > 0");
  int ci = 0;
  int cj = 0;
  if (!ClusterShift(dims.sites, &ci, &cj)) {
    throw ConfigError("site count " + std::to_string(dims.sites) +
                      " is not a hexagonal cluster size i*i+i*j+j*j");
  }
  Layout layout;
  layout.isd_m = isd_m;
  layout.tilt_deg = tilt_deg;
  layout.wraparound = wraparound;

  const Point u1{isd_m, 0.0};
  const Point u2{isd_m / 2.0, isd_m * std::sqrt(3.0) / 2.0};
  layout.wrap[0] = Add(Scale(u1, ci), Scale(u2, cj));
  layout.wrap[1] = Add(Scale(u1, -cj), Scale(u2, ci + cj));

  // Lattice points inside the fundamental parallelogram, each moved to its
  // smallest-norm image so the cluster is centred on the origin.
  const int n = dims.sites;
  struct Candidate {
    Point p;
    double norm;
    double angle;
  };
  std::vector<Candidate> sites;
  for (int a = -n - 1; a <= n + 1; ++a) {
    for (int b = -n - 1; b <= n + 1; ++b) {
      const long s = static_cast<long>(ci + cj) * a + static_cast<long>(cj) * b;
      const long t = -static_cast<long>(cj) * a + static_cast<long>(ci) * b;
      if (s < 0 || s >= n || t < 0 || t >= n) continue;
      Point p = Add(Scale(u1, a), Scale(u2, b));
      Point best = p;
      for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
          const Point c =
              Add(p, Add(Scale(layout.wrap[0], i), Scale(layout.wrap[1], j)));
          const double dn = Norm(c) - Norm(best);
          if (dn < -1e-6 * isd_m ||
              (std::abs(dn) <= 1e-6 * isd_m &&
               (c.x < best.x - 1e-9 ||
                (std::abs(c.x - best.x) <= 1e-9 && c.y < best.y)))) {
            best = c;
          }
        }
      }
      double angle = std::atan2(best.y, best.x) / kDegree;
      if (angle < -1e-9) angle += 360.0;
      sites.push_back({best, Norm(best), angle});
    }
  }
  std::sort(sites.begin(), sites.end(),
            [isd_m](const Candidate& l, const Candidate& r) {
              if (std::abs(l.norm - r.norm) > 1e-6 * isd_m) {
                return l.norm < r.norm;
              }
              return l.angle < r.angle;
            });
  if (static_cast<int>(sites.size()) != n) {
    throw ConfigError("internal: site enumeration produced " +
                      std::to_string(sites.size()) + " sites");
  }

  const double radius = layout.cell_radius();
  for (int s = 0; s < n; ++s) {
    layout.sites.push_back(sites[s].p);
    for (int face = 0; face < 3; ++face) {
      const double boresight = 120.0 * face;
      layout.sector_site.push_back(s);
      layout.boresight_deg.push_back(boresight);
      layout.sector_centers.push_back(
          Add(sites[s].p, Point{radius * std::cos(boresight * kDegree),
                                radius * std::sin(boresight * kDegree)}));
    }
  }
  return layout;
}

NeighborMap::NeighborMap(std::vector<std::vector<int>> lists)
    : lists_(std::move(lists)) {
  const int k_count = num_sectors();
  for (int k = 0; k < k_count; ++k) {
    auto sorted = lists_[k];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ConfigError("duplicate neighbor of sector " + std::to_string(k));
    }
    for (int j : lists_[k]) {
      if (j < 0 || j >= k_count) {
        throw ConfigError("neighbor index out of range");
      }
      if (j == k) {
        throw ConfigError("sector " + std::to_string(k) +
                          " listed as its own neighbor");
      }
    }
  }
  for (int k = 0; k < k_count; ++k) {
    for (int j : lists_[k]) {
      if (IndexOf(j, k) < 0) {
        throw ConfigError("neighbor map not symmetric: " + std::to_string(j) +
                          " in list of " + std::to_string(k) +
                          " but not vice versa");
      }
    }
  }
}

NeighborMap NeighborMap::Circulant(int sectors,
                                   const std::vector<int>& offsets) {
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(sectors));
  for (int k = 0; k < sectors; ++k) {
    for (int off : offsets) {
      for (int sign : {1, -1}) {
        const int j = ((k + sign * off) % sectors + sectors) % sectors;
        if (j != k &&
            std::find(lists[k].begin(), lists[k].end(), j) == lists[k].end()) {
          lists[k].push_back(j);
        }
      }
    }
    std::sort(lists[k].begin(), lists[k].end());
  }
  return NeighborMap(std::move(lists));
}

bool NeighborMap::uniform() const {
  for (const auto& l : lists_) {
    if (l.size() != lists_.front().size()) return false;
  }
  return true;
}

int NeighborMap::common_degree() const {
  if (lists_.empty()) return 0;
  if (!uniform()) throw ConfigError("neighbor lists have different sizes");
  return static_cast<int>(lists_.front().size());
}

double NeighborMap::mean_degree() const {
  if (lists_.empty()) return 0.0;
  double total = 0.0;
  for (const auto& l : lists_) total += static_cast<double>(l.size());
  return total / static_cast<double>(lists_.size());
}

int NeighborMap::IndexOf(int k, int neighbor) const {
  const auto& l = lists_[k];
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == neighbor) return static_cast<int>(i);
  }
  return -1;
}

NeighborMap GeometricNeighbors(const Layout& layout) {
  const int k_count = layout.num_sectors();
  const double spacing = std::sqrt(3.0) * layout.cell_radius();
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(k_count));
  for (int k = 0; k < k_count; ++k) {
    for (int j = 0; j < k_count; ++j) {
      if (j == k) continue;
      const double d = Norm(
          layout.Displacement(layout.sector_centers[k], layout.sector_centers[j]));
      if (std::abs(d - spacing) <= 1e-6 * layout.isd_m) lists[k].push_back(j);
    }
  }
  return NeighborMap(std::move(lists));
}

NeighborMap StrongestInterferers(
    const std::vector<std::vector<double>>& coupling, int count) {
  const int k_count = static_cast<int>(coupling.size());
  if (count < 1 || count >= k_count) {
    throw ConfigError("strongest-interferer count must be in [1, K-1]");
  }
  std::vector<std::vector<char>> adjacent(
      static_cast<std::size_t>(k_count),
      std::vector<char>(static_cast<std::size_t>(k_count), 0));
  for (int k = 0; k < k_count; ++k) {
    std::vector<int> order;
    for (int j = 0; j < k_count; ++j) {
      if (j != k) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return coupling[k][a] > coupling[k][b];
    });
    for (int i = 0; i < count; ++i) {
      adjacent[k][order[i]] = 1;
      adjacent[order[i]][k] = 1;
    }
  }
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(k_count));
  for (int k = 0; k < k_count; ++k) {
    for (int j = 0; j < k_count; ++j) {
      if (adjacent[k][j]) lists[k].push_back(j);
    }
  }
  return NeighborMap(std::move(lists));
}

double AntennaPatternDb(double theta_deg, double phi_deg, double tilt_deg) {
  const double theta = WrapAngleDeg(theta_deg);
  const double horizontal = -std::min(12.0 * std::pow(theta / 70.0, 2), 20.0);
  const double elevation =
      -std::min(12.0 * std::pow((phi_deg - tilt_deg) / 15.0, 2), 20.0);
  return -std::min(-(horizontal + elevation), 20.0);
}

void ChannelConfig::Validate() const {
  if (shadowing_sigma_db < 0.0) throw ConfigError("shadowing sigma must be >= 0");
  if (shadowing_site_correlation < 0.0 || shadowing_site_correlation > 1.0) {
    throw ConfigError("shadowing correlation must be in [0, 1]");
  }
  if (fading_correlation < 0.0 || fading_correlation >= 1.0) {
    throw ConfigError("fading correlation must be in [0, 1)");
  }
  if (!(min_distance_m > 0.0)) throw ConfigError("min distance must be > 0");
}

double PathlossDb(double distance_m, const ChannelConfig& config) {
  return config.pathloss_a_db + config.pathloss_b * std::log10(distance_m);
}

double LinkGainDb(const Layout& layout, int sector, Point ue,
                  const ChannelConfig& config) {
  const Point site = layout.sites[layout.sector_site[sector]];
  const Point d = layout.Displacement(site, ue);
  const double d2d = Norm(d);
  if (d2d < config.min_distance_m) {
    std::ostringstream msg;
    msg << "user at (" << ue.x << ", " << ue.y << ") is " << d2d
        << " m from site " << layout.sector_site[sector]
        << ", below the minimum " << config.min_distance_m << " m";
    throw ConfigError(msg.str());
  }
  const double dh = config.bs_height_m - config.ue_height_m;
  const double d3d = std::hypot(d2d, dh);
  const double theta =
      std::atan2(d.y, d.x) / kDegree - layout.boresight_deg[sector];
  const double phi = std::atan2(dh, d2d) / kDegree;
  return -PathlossDb(d3d, config) + config.bs_antenna_gain_dbi +
         AntennaPatternDb(theta, phi, layout.tilt_deg) +
         config.ue_antenna_gain_dbi - config.feeder_loss_db;
}

ChannelTensor::ChannelTensor(int sectors, std::vector<int> users, int rbs)
    : sectors_(sectors), rbs_(rbs), users_(std::move(users)) {
  data_.resize(static_cast<std::size_t>(sectors));
  for (int k = 0; k < sectors; ++k) {
    data_[k].assign(static_cast<std::size_t>(users_[k]) * rbs * sectors, 0.0);
  }
}

void ChannelTensor::ExportCsv(std::ostream& out) const {
  out << "m,n,k,k_tilde,gain_linear\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (int k = 0; k < sectors_; ++k) {
    for (int m = 0; m < users_[k]; ++m) {
      for (int n = 0; n < rbs_; ++n) {
        for (int j = 0; j < sectors_; ++j) {
          line.str("");
          line << m << ',' << n << ',' << k << ',' << j << ','
               << gain(k, m, n, j) << '\n';
          out << line.str();
        }
      }
    }
  }
}

double WidebandSinr(std::span<const double> gains, int sector,
                    double tx_power_w, double noise_w) {
  double interference = 0.0;
  for (std::size_t j = 0; j < gains.size(); ++j) {
    if (static_cast<int>(j) != sector) interference += gains[j];
  }
  return tx_power_w * gains[sector] / (tx_power_w * interference + noise_w);
}

std::vector<int> AssociateUsers(
    const std::vector<std::vector<double>>& wideband_gains,
    double tx_power_w, double noise_w) {
  std::vector<int> serving;
  serving.reserve(wideband_gains.size());
  for (const auto& g : wideband_gains) {
    int best = 0;
    double best_sinr = -1.0;
    for (int j = 0; j < static_cast<int>(g.size()); ++j) {
      const double sinr = WidebandSinr(g, j, tx_power_w, noise_w);
      if (sinr > best_sinr) {
        best_sinr = sinr;
        best = j;
      }
    }
    serving.push_back(best);
  }
  return serving;
}

ChannelModel::ChannelModel(const Layout& layout, const NetworkDims& dims,
                           const RadioConfig& radio,
                           const ChannelConfig& config, std::uint64_t seed)
    : dims_(dims), config_(config), rng_(seed) {
  dims_.Validate(/*tri_sector=*/false);
  radio.Validate();
  config_.Validate();
  if (layout.num_sectors() != dims_.sectors) {
    throw ConfigError("layout and dims disagree on the sector count");
  }
  DropUsers(layout, radio);
}

void ChannelModel::DropUsers(const Layout& layout, const RadioConfig& radio) {
  const int k_count = dims_.sectors;
  const double radius = layout.cell_radius();
  const int site_count = static_cast<int>(layout.sites.size());
  std::uniform_int_distribution<int> pick_cell(0, k_count - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double rho = config_.shadowing_site_correlation;

  drop_.users_of.assign(static_cast<std::size_t>(k_count), {});
  const int total = dims_.TotalUsers();
  const long max_attempts = 2000L * total + 10000L;
  long attempts = 0;
  int placed = 0;
  while (placed < total) {
    if (++attempts > max_attempts) {
      throw ConfigError("could not fill every sector with its users after " +
                        std::to_string(max_attempts) + " draws");
    }
    // Uniform point in a uniformly chosen hexagonal cell; the cells tile
    // the network so this is uniform over the whole area.
    const int cell = pick_cell(rng_);
    Point offset;
    do {
      offset = {(2.0 * unit(rng_) - 1.0) * radius,
                (2.0 * unit(rng_) - 1.0) * radius * std::sqrt(3.0) / 2.0};
    } while (std::sqrt(3.0) * std::abs(offset.x) + std::abs(offset.y) >
             std::sqrt(3.0) * radius);
    const Point ue = Add(layout.sector_centers[cell], offset);

    const double common = normal(rng_);
    std::vector<double> shadow(static_cast<std::size_t>(site_count));
    for (auto& s : shadow) {
      s = config_.shadowing_sigma_db *
          (std::sqrt(rho) * common + std::sqrt(1.0 - rho) * normal(rng_));
    }

    bool too_close = false;
    for (const Point& site : layout.sites) {
      if (Norm(layout.Displacement(site, ue)) < config_.min_distance_m) {
        too_close = true;
      }
    }
    if (too_close) continue;

    std::vector<double> gains(static_cast<std::size_t>(k_count));
    for (int j = 0; j < k_count; ++j) {
      gains[j] = DbToLinear(LinkGainDb(layout, j, ue, config_) +
                            shadow[layout.sector_site[j]]);
    }
    const int serving =
        AssociateUsers({gains}, radio.tx_power_per_rb_w, radio.noise_per_rb_w)
            .front();
    if (static_cast<int>(drop_.users_of[serving].size()) >=
        dims_.users[serving]) {
      continue;
    }
    drop_.users_of[serving].push_back(static_cast<int>(drop_.positions.size()));
    drop_.positions.push_back(ue);
    drop_.serving.push_back(serving);
    drop_.wideband_gain.push_back(std::move(gains));
    ++placed;
  }
}

ChannelTensor ChannelModel::NextSubframe() {
  const int k_count = dims_.sectors;
  const int n_count = dims_.rbs;
  ChannelTensor tensor(k_count, dims_.users, n_count);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double a = config_.fading_correlation;
  const double b = std::sqrt(1.0 - a * a);
  if (config_.fast_fading && !fading_started_) {
    fading_re_.resize(static_cast<std::size_t>(k_count));
    fading_im_.resize(static_cast<std::size_t>(k_count));
    for (int k = 0; k < k_count; ++k) {
      const std::size_t size =
          static_cast<std::size_t>(dims_.users[k]) * n_count * k_count;
      fading_re_[k].resize(size);
      fading_im_[k].resize(size);
    }
  }
  for (int k = 0; k < k_count; ++k) {
    std::size_t idx = 0;
    for (int m = 0; m < dims_.users[k]; ++m) {
      const auto& wideband = drop_.wideband_gain[drop_.users_of[k][m]];
      for (int n = 0; n < n_count; ++n) {
        for (int j = 0; j < k_count; ++j, ++idx) {
          double power = 1.0;
          if (config_.fast_fading) {
            double& re = fading_re_[k][idx];
            double& im = fading_im_[k][idx];
            if (!fading_started_) {
              re = normal(rng_);
              im = normal(rng_);
            } else {
              re = a * re + b * normal(rng_);
              im = a * im + b * normal(rng_);
            }
            power = re * re + im * im;
          }
          tensor.gain(k, m, n, j) = wideband[j] * power;
        }
      }
    }
  }
  fading_started_ = true;
  return tensor;
}

std::vector<std::vector<double>> ChannelModel::MeanCoupling() const {
  const int k_count = dims_.sectors;
  std::vector<std::vector<double>> coupling(
      static_cast<std::size_t>(k_count),
      std::vector<double>(static_cast<std::size_t>(k_count), 0.0));
  for (int k = 0; k < k_count; ++k) {
    for (int u : drop_.users_of[k]) {
      for (int j = 0; j < k_count; ++j) {
        coupling[k][j] += drop_.wideband_gain[u][j] / dims_.users[k];
      }
    }
  }
  return coupling;
}

ChannelTensor DrawChannels(const Layout& layout, const NetworkDims& dims,
                           const RadioConfig& radio,
                           const ChannelConfig& config, std::uint64_t seed) {
  ChannelModel model(layout, dims, radio, config, seed);
  return model.NextSubframe();
}

}  // namespace icic::net
