#pragma once

#include <cstdint>
#include <optional>

#include "squant/scenario.hpp"

namespace squant {

/// Primary network description for generated topologies. The transmitter sits
/// at the region center; receivers are placed on the circle of radius
/// `rx_distance_m`, one per equal angular sector. Worst-case (hypothetical)
/// receivers carry a pinned experienced SINR; known receivers use the physical
/// link budget instead.
struct PuParams {
  double tx_power_dbm = 30.0;
  double range_m = 500.0;
  int n_receivers = 6;
  std::optional<double> rx_distance_m;  // defaults to range_m
  double beta_min_db = 10.0;
  std::optional<double> experienced_sinr_db = 20.0;
  bool directional_rx = true;
};

struct TopologyParams {
  double extent_w_m = 4300.0;
  double extent_h_m = 3700.0;
  int n_secondary = 16;
  double su_range_m = 100.0;
  int n_su_receivers = 1;
  double su_tx_power_dbm = 15.0;
  double su_beta_min_db = 3.0;
  double su_noise_dbm = -106.0;
  bool su_directional = true;  // sector antennas on SU transmitters and receivers
  std::optional<PuParams> pu;
  std::uint64_t seed = 0;
  double grid_side_m = 100.0;
};

/// Seeded random topology: SU transmitters uniform over the region, each with
/// n_su_receivers placed uniformly within su_range (resampled into the region
/// rectangle). Deterministic per seed; one RNG stream per network.
Scenario generate_topology(const TopologyParams& params);

}  // namespace squant
