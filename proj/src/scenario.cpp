#include "squant/scenario.hpp"

#include <cmath>
#include <set>
#include <string>

namespace squant {

namespace {

std::string net_path(std::size_t i) { return "/networks/" + std::to_string(i); }

}  // namespace

void Scenario::validate() const {
  try {
    bounds.validate();
    prop.validate();
    frame.validate();
    grid.build();
  } catch (const ConfigError& e) {
    throw ValidationError("", e.what());
  }
  if (ambient_noise_w < 0.0) throw ValidationError("/ambient_noise_dbm", "ambient noise must be >= 0");

  const HexGrid g = grid.build();
  const Point lo{g.origin().x - g.col_pitch() / 2.0, g.origin().y - g.row_pitch() / 2.0};
  const Point hi{lo.x + g.extent().x, lo.y + g.extent().y};
  auto inside = [&](Point p) {
    return p.x >= lo.x - 1e-9 && p.x <= hi.x + 1e-9 && p.y >= lo.y - 1e-9 && p.y <= hi.y + 1e-9;
  };

  std::set<std::string> net_ids, tx_ids, rx_ids;
  for (std::size_t i = 0; i < networks.size(); ++i) {
    const Network& n = networks[i];
    if (n.id.empty()) throw ValidationError(net_path(i) + "/id", "network id must not be empty");
    if (!net_ids.insert(n.id).second)
      throw ValidationError(net_path(i) + "/id", "duplicate network id '" + n.id + "'");
    if (!tx_ids.insert(n.transmitter.id).second)
      throw ValidationError(net_path(i) + "/transmitter/id",
                            "duplicate transmitter id '" + n.transmitter.id + "'");
    if (!(n.transmitter.tx_power_w > 0.0) || n.transmitter.tx_power_w > bounds.p_max_w * (1 + 1e-12))
      throw ValidationError(net_path(i) + "/transmitter/tx_power_dbm",
                            "transmit power must be in (0, p_max]");
    if (!inside(n.transmitter.location))
      throw ValidationError(net_path(i) + "/transmitter", "transmitter outside grid extent");
    for (std::size_t j = 0; j < n.receivers.size(); ++j) {
      const ReceiverSpec& r = n.receivers[j];
      const std::string rp = net_path(i) + "/receivers/" + std::to_string(j);
      if (!rx_ids.insert(r.id).second)
        throw ValidationError(rp + "/id", "duplicate receiver id '" + r.id + "'");
      if (r.beta_min < 1.0) throw ValidationError(rp + "/beta_min_db", "beta_min must be >= 0 dB");
      if (r.noise_w < 0.0) throw ValidationError(rp + "/noise_dbm", "noise must be >= 0");
      if (!inside(r.location)) throw ValidationError(rp, "receiver outside grid extent");
      const TransmitterSpec* serving = find_transmitter(r.served_by);
      if (serving == nullptr)
        throw ValidationError(rp + "/served_by",
                              "references unknown transmitter '" + r.served_by + "'");
      if (distance(r.location, n.transmitter.location) > n.range_m * (1 + 1e-9) + 1e-9)
        throw ValidationError(rp, "receiver outside the network service range");
      if (r.experienced_sinr && !(*r.experienced_sinr > 0.0))
        throw ValidationError(rp + "/experienced_sinr_db", "experienced SINR must be positive");
    }
    const int b_count = frame.band_count(), q_count = frame.quantum_count();
    for (int b : n.bands)
      if (b < 0 || b >= b_count)
        throw ValidationError(net_path(i) + "/bands", "band index out of range");
    for (int q : n.quanta)
      if (q < 0 || q >= q_count)
        throw ValidationError(net_path(i) + "/quanta", "quantum index out of range");
  }
}

}  // namespace squant
