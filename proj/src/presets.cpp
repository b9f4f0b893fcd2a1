#include "squant/presets.hpp"

#include "squant/units.hpp"

namespace squant::presets {

Scenario single_transmitter() {
  Scenario sc;
  sc.grid = {100.0, 26, 26, {0.0, 0.0}};
  Network n;
  n.id = "net-0";
  n.role = NetworkRole::secondary;
  n.transmitter = {"tx-0", {1000.0, 2000.0}, dbm_to_watt(15.0), Antenna::omni()};
  sc.networks.push_back(std::move(n));
  sc.validate();
  return sc;
}

Scenario transmitter_and_receiver() {
  Scenario sc = single_transmitter();
  Network& n = sc.networks.front();
  n.range_m = 1000.0;
  ReceiverSpec rx;
  rx.id = "rx-0";
  rx.location = {1200.0, 1200.0};
  rx.beta_min = db_to_linear(6.0);
  rx.noise_w = dbm_to_watt(-106.0);
  rx.served_by = n.transmitter.id;
  rx.antenna = Antenna::omni();
  rx.experienced_sinr = db_to_linear(33.0);
  n.receivers.push_back(std::move(rx));
  sc.validate();
  return sc;
}

Scenario discretization_probe() {
  Scenario sc;
  const HexGrid grid = HexGrid::covering(100.0, 2000.0, 2000.0);
  sc.grid = {100.0, grid.cols(), grid.rows(), {0.0, 0.0}};
  // East vertex of cell (6, 5): equidistant (one side length) from the three
  // nearest centers, the farthest a point can be from all sample points.
  const Point vertex{grid.center({6, 5}).x + grid.side(), grid.center({6, 5}).y};
  Network n;
  n.id = "net-0";
  n.role = NetworkRole::secondary;
  n.range_m = 30.0;
  n.transmitter = {"tx-0", {vertex.x + 22.0, vertex.y}, dbm_to_watt(15.0), Antenna::omni()};
  ReceiverSpec rx;
  rx.id = "rx-0";
  rx.location = vertex;
  rx.beta_min = db_to_linear(6.0);
  rx.noise_w = dbm_to_watt(-106.0);
  rx.served_by = n.transmitter.id;
  n.receivers.push_back(std::move(rx));
  sc.networks.push_back(std::move(n));
  sc.validate();
  return sc;
}

TopologyParams recovery_topology(std::uint64_t seed) {
  TopologyParams p;
  p.extent_w_m = 4300.0;
  p.extent_h_m = 3700.0;
  p.n_secondary = 16;
  p.n_su_receivers = 6;  // 16 networks x 7 devices = 112 transceivers
  p.su_range_m = 100.0;
  p.seed = seed;
  return p;
}

TopologyParams mechanism_comparison_topology(int n_secondary, std::uint64_t seed) {
  TopologyParams p;
  p.extent_w_m = 4300.0;
  p.extent_h_m = 3700.0;
  p.n_secondary = n_secondary;
  p.n_su_receivers = 1;
  p.su_range_m = 100.0;
  p.su_beta_min_db = 3.0;
  p.seed = seed;
  PuParams pu;
  pu.tx_power_dbm = 30.0;
  pu.range_m = 500.0;
  pu.n_receivers = 6;
  pu.beta_min_db = 10.0;
  pu.experienced_sinr_db = 20.0;  // worst-case hypothetical receivers
  pu.directional_rx = true;
  p.pu = pu;
  return p;
}

TopologyParams active_incumbent_topology(int n_requests, std::uint64_t seed) {
  TopologyParams p = mechanism_comparison_topology(n_requests, seed);
  p.pu->rx_distance_m = 250.0;
  p.pu->experienced_sinr_db.reset();  // known receivers: physical link budget
  return p;
}

SamConfig comparison_config() {
  SamConfig cfg;
  cfg.su_sensitivity_dbm = -80.0;
  cfg.underlay_power_dbm = -76.0;  // thermal floor for 6 MHz plus 30 dB
  cfg.overlay_power_dbm = 30.0;
  cfg.stov_margin_db = 10.0;
  cfg.nsccx_margin_db = 3.0;
  cfg.max_su_power_dbm = 30.0;
  return cfg;
}

Scenario estimation_scene() {
  Scenario sc;
  const HexGrid g = HexGrid::covering(100.0, 2000.0, 2000.0);
  sc.grid = {100.0, g.cols(), g.rows(), {0.0, 0.0}};
  sc.ambient_noise_w = dbm_to_watt(-106.0);
  const struct {
    const char* id;
    Point loc;
    double dbm;
  } txs[] = {{"alpha", {400.0, 500.0}, 20.0},
             {"bravo", {1500.0, 600.0}, 15.0},
             {"charlie", {900.0, 1600.0}, 25.0}};
  for (const auto& t : txs) {
    Network n;
    n.id = t.id;
    n.role = NetworkRole::secondary;
    n.transmitter = {std::string(t.id) + "-tx", t.loc, dbm_to_watt(t.dbm), Antenna::omni()};
    sc.networks.push_back(std::move(n));
  }
  Network& a = sc.networks.front();
  a.range_m = 300.0;
  ReceiverSpec rx;
  rx.id = "alpha-rx";
  rx.location = {500.0, 700.0};
  rx.beta_min = db_to_linear(6.0);
  rx.noise_w = dbm_to_watt(-106.0);
  rx.served_by = a.transmitter.id;
  a.receivers.push_back(std::move(rx));
  sc.validate();
  return sc;
}

}  // namespace squant::presets
