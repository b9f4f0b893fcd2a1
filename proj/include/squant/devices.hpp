#pragma once

#include <optional>
#include <string>

#include "squant/antenna.hpp"
#include "squant/errors.hpp"
#include "squant/geometry.hpp"
#include "squant/units.hpp"

namespace squant {

/// Absolute power ceiling and measurement floor that bound the spectrum space
/// at every point. Defaults: 1 W (30 dBm) and 1e-23 W (-200 dBm).
struct PowerBounds {
  double p_max_w = 1.0;
  double p_min_w = 1e-23;

  void validate() const {
    if (!(p_max_w > p_min_w && p_min_w > 0.0))
      throw ConfigError("power bounds: require p_max > p_min > 0");
  }
};

struct TransmitterSpec {
  std::string id;
  Point location;
  double tx_power_w = dbm_to_watt(15.0);
  Antenna antenna;
};

struct ReceiverSpec {
  std::string id;
  Point location;
  double beta_min = db_to_linear(3.0);  // minimum SINR, linear, >= 1
  double noise_w = dbm_to_watt(-106.0);
  std::string served_by;
  Antenna antenna;
  /// When set, the serving signal power is taken as experienced_sinr * noise_w
  /// instead of the link budget. Used for hypothetical worst-case receivers.
  std::optional<double> experienced_sinr;
};

}  // namespace squant
