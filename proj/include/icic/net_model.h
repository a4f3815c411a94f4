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

// Network geometry and channel generation with user association.

#ifndef ICIC_NET_MODEL_H_
#define ICIC_NET_MODEL_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace icic::net {

double DbToLinear(double db);
double LinearToDb(double linear);
double DbmToWatt(double dbm);

// Dimensions of one scenario.
struct NetworkDims {
  int sectors = 0;
  int sites = 0;
  std::vector<int> users;  // users[k] = M^(k)
  int rbs = 0;

  // Tri-sector layout with the same number of users in every sector.
  static NetworkDims TriSector(int sites, int users_per_sector, int rbs);

  // Throws ConfigError when an invariant does not hold.
  void Validate(bool tri_sector) const;
  int TotalUsers() const;
  double MeanUsers() const;
};

struct RadioConfig {
  double tx_power_per_rb_w = 0.0;  // P_C
  double noise_per_rb_w = 0.0;     // P_N
  double bandwidth_hz = 10e6;

  // P_C is the total BS power split evenly over all RBs.
  static RadioConfig FromTotalPower(double bs_power_dbm, int rbs,
                                    double noise_dbm_per_rb,
                                    double bandwidth_hz);
  void Validate() const;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Hexagonal tri-sector sites on a torus. Sector k is served from site
// sector_site[k] and covers the hexagonal cell centred at
// sector_centers[k].
struct Layout {
  double isd_m = 500.0;
  double tilt_deg = 12.0;
  bool wraparound = true;
  std::vector<Point> sites;
  std::vector<int> sector_site;
  std::vector<double> boresight_deg;
  std::vector<Point> sector_centers;
  // Torus generators; the site lattice modulo span{wrap[0], wrap[1]} holds
  // exactly `sites.size()` points.
  std::array<Point, 2> wrap{};

  int num_sectors() const { return static_cast<int>(sector_site.size()); }
  double cell_radius() const { return isd_m / 3.0; }

  // Shortest displacement from `from` to `to`, over all torus images when
  // wraparound is enabled.
  Point Displacement(Point from, Point to) const;
};

// Builds a hexagonal layout of dims.sites tri-sector sites. The site count
// must be a hexagonal cluster size i*i + i*j + j*j (1, 3, 4, 7, 9, 12, 13,
// 16, 19, ...) so that the torus is well defined.
Layout GenerateLayout(const NetworkDims& dims, double isd_m,
                      double tilt_deg = 12.0, bool wraparound = true);

// Symmetric interferer lists, one per sector.
class NeighborMap {
 public:
  NeighborMap() = default;
  // Throws ConfigError unless the lists form a simple symmetric graph.
  explicit NeighborMap(std::vector<std::vector<int>> lists);

  // Sector k is adjacent to k +/- every offset (mod K).
  static NeighborMap Circulant(int sectors, const std::vector<int>& offsets);

  int num_sectors() const { return static_cast<int>(lists_.size()); }
  std::span<const int> of(int k) const { return lists_[k]; }
  int degree(int k) const { return static_cast<int>(lists_[k].size()); }
  bool uniform() const;
  // K~; throws ConfigError when degrees differ.
  int common_degree() const;
  double mean_degree() const;
  // Position of `neighbor` in the list of `k`, or -1.
  int IndexOf(int k, int neighbor) const;

  bool operator==(const NeighborMap&) const = default;

 private:
  std::vector<std::vector<int>> lists_;
};

// First-tier sectors: cells whose hexagons share an edge with the cell of
// each sector (six in a wrapped hexagonal layout).
NeighborMap GeometricNeighbors(const Layout& layout);

// Each sector picks its `count` strongest interferers by coupling[k][j]; the
// relation is then symmetrised, so degrees may exceed `count`.
NeighborMap StrongestInterferers(
    const std::vector<std::vector<double>>& coupling, int count);

// Combined horizontal/elevation pattern in dB relative to boresight gain,
// clamped to [-20, 0].
double AntennaPatternDb(double theta_deg, double phi_deg, double tilt_deg);

struct ChannelConfig {
  double pathloss_a_db = 15.3;  // PL(d) = A + B log10(d / 1 m)
  double pathloss_b = 37.6;
  double shadowing_sigma_db = 8.0;
  double shadowing_site_correlation = 0.5;
  double bs_antenna_gain_dbi = 17.0;
  double ue_antenna_gain_dbi = 0.0;
  double feeder_loss_db = 2.0;
  double bs_height_m = 25.0;
  double ue_height_m = 1.5;
  double min_distance_m = 25.0;
  bool fast_fading = true;
  // AR(1) coefficient of the complex fading between consecutive sub-frames.
  double fading_correlation = 0.0;

  void Validate() const;
};

double PathlossDb(double distance_m, const ChannelConfig& config);

// Deterministic part of the gain from `sector` to a UE at `ue`, in dB
// (everything except shadowing and fading). Throws
// ConfigError when the UE is closer than min_distance_m to the site.
double LinkGainDb(const Layout& layout, int sector, Point ue,
                  const ChannelConfig& config);

// Linear power gains H[k](m, n, j): from sector j on RB n to user m served by
// sector k. Serving gains sit at j == k.
class ChannelTensor {
 public:
  ChannelTensor() = default;
  ChannelTensor(int sectors, std::vector<int> users, int rbs);

  int sectors() const { return sectors_; }
  int rbs() const { return rbs_; }
  int users(int k) const { return users_[k]; }
  const std::vector<int>& user_counts() const { return users_; }

  double gain(int k, int m, int n, int j) const {
    return data_[k][Index(k, m, n, j)];
  }
  double& gain(int k, int m, int n, int j) {
    return data_[k][Index(k, m, n, j)];
  }
  // All K gains seen by user m of sector k on RB n.
  std::span<const double> gains(int k, int m, int n) const {
    return {data_[k].data() + Index(k, m, n, 0),
            static_cast<std::size_t>(sectors_)};
  }

  // Rows `m,n,k,k_tilde,gain_linear`, one per (serving sector, user, RB,
  // transmitting sector).
  void ExportCsv(std::ostream& out) const;

  bool operator==(const ChannelTensor&) const = default;

 private:
  std::size_t Index(int k, int m, int n, int j) const {
    (void)k;
    return (static_cast<std::size_t>(m) * rbs_ + n) * sectors_ + j;
  }

  int sectors_ = 0;
  int rbs_ = 0;
  std::vector<int> users_;
  std::vector<std::vector<double>> data_;
};

// Serving sector per user: the sector with the highest wideband SINR, ties to
// the lowest index. wideband_gains[u][j] excludes fast fading.
std::vector<int> AssociateUsers(
    const std::vector<std::vector<double>>& wideband_gains,
    double tx_power_w, double noise_w);

double WidebandSinr(std::span<const double> gains, int sector,
                    double tx_power_w, double noise_w);

struct UserDrop {
  std::vector<Point> positions;
  std::vector<int> serving;
  std::vector<std::vector<int>> users_of;  // sector -> user ids, ascending
  std::vector<std::vector<double>> wideband_gain;  // [user][sector], linear
};

// One drop: users placed uniformly over the network area until every sector
// k has exactly dims.users[k] associated users; fading evolves per
// sub-frame.
class ChannelModel {
 public:
  ChannelModel(const Layout& layout, const NetworkDims& dims,
               const RadioConfig& radio, const ChannelConfig& config,
               std::uint64_t seed);

  const UserDrop& drop() const { return drop_; }
  const NetworkDims& dims() const { return dims_; }

  // Channel of the next sub-frame.
  ChannelTensor NextSubframe();

  // Mean large-scale coupling of sector j into sector k's users.
  std::vector<std::vector<double>> MeanCoupling() const;

 private:
  void DropUsers(const Layout& layout, const RadioConfig& radio);

  NetworkDims dims_;
  ChannelConfig config_;
  std::mt19937_64 rng_;
  UserDrop drop_;
  // Complex fading state per (serving sector, user, RB, sector).
  std::vector<std::vector<double>> fading_re_;
  std::vector<std::vector<double>> fading_im_;
  bool fading_started_ = false;
};

// Single sub-frame convenience wrapper around ChannelModel.
ChannelTensor DrawChannels(const Layout& layout, const NetworkDims& dims,
                           const RadioConfig& radio,
                           const ChannelConfig& config, std::uint64_t seed);

// Mixes a base seed with a stream index into an independent seed.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream);

}  // namespace icic::net

#endif  // ICIC_NET_MODEL_H_
