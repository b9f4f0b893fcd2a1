#pragma once

#include <string>
#include <vector>

#include "squant/consumption.hpp"
#include "squant/devices.hpp"
#include "squant/frame.hpp"
#include "squant/hexgrid.hpp"
#include "squant/propagation.hpp"

namespace squant {

enum class NetworkRole { primary, secondary };

/// One spectrum-access request: a transmitter and the receivers it serves.
struct Network {
  std::string id;
  NetworkRole role = NetworkRole::secondary;
  TransmitterSpec transmitter;
  std::vector<ReceiverSpec> receivers;
  double range_m = 0.0;  // service range; receivers must lie within it
  /// Active band / quantum indices. Empty means active in all.
  std::vector<int> bands;
  std::vector<int> quanta;

  bool active_in(int quantum, int band) const {
    auto has = [](const std::vector<int>& v, int x) {
      if (v.empty()) return true;
      for (int e : v)
        if (e == x) return true;
      return false;
    };
    return has(quanta, quantum) && has(bands, band);
  }
};

struct GridParams {
  double side_m = 100.0;
  int cols = 26;
  int rows = 26;
  Point origin{0.0, 0.0};

  HexGrid build() const { return HexGrid(side_m, cols, rows, origin); }
};

struct Scenario {
  PowerBounds bounds;
  PropagationModel prop;
  BoundForm bound_form = BoundForm::inverse;
  double ambient_noise_w = 0.0;
  GridParams grid;
  SpectrumFrame frame;
  std::vector<Network> networks;

  const Network* find_network(const std::string& id) const {
    for (const auto& n : networks)
      if (n.id == id) return &n;
    return nullptr;
  }

  const TransmitterSpec* find_transmitter(const std::string& tx_id) const {
    for (const auto& n : networks)
      if (n.transmitter.id == tx_id) return &n.transmitter;
    return nullptr;
  }

  std::vector<const Network*> primaries() const {
    std::vector<const Network*> out;
    for (const auto& n : networks)
      if (n.role == NetworkRole::primary) out.push_back(&n);
    return out;
  }

  std::vector<const Network*> secondaries() const {
    std::vector<const Network*> out;
    for (const auto& n : networks)
      if (n.role == NetworkRole::secondary) out.push_back(&n);
    return out;
  }

  /// Full structural validation. Throws ValidationError with a JSON-pointer
  /// style path on the first violation.
  void validate() const;
};

}  // namespace squant
