#include "squant/topology.hpp"

#include <cmath>
#include <numbers>

#include "squant/rng.hpp"
#include "squant/units.hpp"

namespace squant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string pad2(int i) { return (i < 10 ? "0" : "") + std::to_string(i); }

Point centroid(const std::vector<ReceiverSpec>& rxs, Point fallback) {
  if (rxs.empty()) return fallback;
  Point c{0.0, 0.0};
  for (const auto& r : rxs) {
    c.x += r.location.x;
    c.y += r.location.y;
  }
  c.x /= static_cast<double>(rxs.size());
  c.y /= static_cast<double>(rxs.size());
  return c;
}

}  // namespace

Scenario generate_topology(const TopologyParams& p) {
  if (p.n_secondary < 0 || p.n_su_receivers < 0)
    throw ConfigError("topology: counts must be >= 0");
  if (!(p.extent_w_m > 0.0 && p.extent_h_m > 0.0))
    throw ConfigError("topology: region extent must be positive");
  if (p.su_range_m > std::min(p.extent_w_m, p.extent_h_m))
    throw ConfigError("topology: SU range exceeds the region");
  if (p.pu && p.pu->range_m * 2.0 > std::min(p.extent_w_m, p.extent_h_m))
    throw ConfigError("topology: PU range exceeds the region");

  Scenario sc;
  const HexGrid grid = HexGrid::covering(p.grid_side_m, p.extent_w_m, p.extent_h_m);
  sc.grid = {p.grid_side_m, grid.cols(), grid.rows(), {0.0, 0.0}};

  if (p.pu) {
    const PuParams& pu = *p.pu;
    Network n;
    n.id = "pu";
    n.role = NetworkRole::primary;
    n.range_m = pu.range_m;
    n.transmitter = {"pu-tx", {p.extent_w_m / 2.0, p.extent_h_m / 2.0},
                     dbm_to_watt(pu.tx_power_dbm), Antenna::omni()};
    const double r = pu.rx_distance_m.value_or(pu.range_m);
    for (int k = 0; k < pu.n_receivers; ++k) {
      const double ang = kTwoPi * k / std::max(1, pu.n_receivers);
      ReceiverSpec rx;
      rx.id = "pu-rx-" + pad2(k);
      rx.location = {n.transmitter.location.x + r * std::cos(ang),
                     n.transmitter.location.y + r * std::sin(ang)};
      rx.beta_min = db_to_linear(pu.beta_min_db);
      rx.noise_w = dbm_to_watt(p.su_noise_dbm);
      rx.served_by = n.transmitter.id;
      if (pu.directional_rx)
        rx.antenna = Antenna::sector(bearing(rx.location, n.transmitter.location));
      if (pu.experienced_sinr_db) rx.experienced_sinr = db_to_linear(*pu.experienced_sinr_db);
      n.receivers.push_back(std::move(rx));
    }
    sc.networks.push_back(std::move(n));
  }

  for (int i = 0; i < p.n_secondary; ++i) {
    auto rng = rng_stream(p.seed, static_cast<std::uint64_t>(i));
    std::uniform_real_distribution<double> ux(0.0, p.extent_w_m);
    std::uniform_real_distribution<double> uy(0.0, p.extent_h_m);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    Network n;
    n.id = "su-" + pad2(i);
    n.role = NetworkRole::secondary;
    n.range_m = p.su_range_m;
    n.transmitter.id = n.id + "-tx";
    n.transmitter.location = {ux(rng), uy(rng)};
    n.transmitter.tx_power_w = dbm_to_watt(p.su_tx_power_dbm);

    for (int k = 0; k < p.n_su_receivers; ++k) {
      ReceiverSpec rx;
      rx.id = n.id + "-rx-" + pad2(k);
      // Area-uniform draw within the service range, resampled into the region.
      for (;;) {
        const double rr = p.su_range_m * std::sqrt(u01(rng));
        const double ang = kTwoPi * u01(rng);
        rx.location = {n.transmitter.location.x + rr * std::cos(ang),
                       n.transmitter.location.y + rr * std::sin(ang)};
        if (rx.location.x >= 0.0 && rx.location.x <= p.extent_w_m && rx.location.y >= 0.0 &&
            rx.location.y <= p.extent_h_m)
          break;
      }
      rx.beta_min = db_to_linear(p.su_beta_min_db);
      rx.noise_w = dbm_to_watt(p.su_noise_dbm);
      rx.served_by = n.transmitter.id;
      if (p.su_directional)
        rx.antenna = Antenna::sector(bearing(rx.location, n.transmitter.location));
      n.receivers.push_back(std::move(rx));
    }
    if (p.su_directional && !n.receivers.empty())
      n.transmitter.antenna = Antenna::sector(
          bearing(n.transmitter.location, centroid(n.receivers, n.transmitter.location)));
    sc.networks.push_back(std::move(n));
  }

  sc.validate();
  return sc;
}

}  // namespace squant
