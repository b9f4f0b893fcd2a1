#pragma once

#include <cmath>
#include <numbers>

#include "squant/geometry.hpp"

namespace squant {

enum class AntennaMode { omni, sector };

/// Ideal sector antenna: unit gain inside the half-beamwidth cone around the
/// boresight, sidelobe gain outside. Omni mode has unit gain everywhere.
struct Antenna {
  AntennaMode mode = AntennaMode::omni;
  double boresight_rad = 0.0;
  double beamwidth_rad = std::numbers::pi / 3.0;  // 60 degrees
  double sidelobe_gain = 0.0;

  /// Gain of an antenna located at `from` toward the point `to`.
  double gain_toward(Point from, Point to) const {
    if (mode == AntennaMode::omni) return 1.0;
    const double d = distance(from, to);
    if (d <= 0.0) return 1.0;  // direction undefined at zero separation
    const double off = wrap_angle(bearing(from, to) - boresight_rad);
    return std::abs(off) <= beamwidth_rad / 2.0 ? 1.0 : sidelobe_gain;
  }

  static Antenna omni() { return {}; }

  static Antenna sector(double boresight_rad, double beamwidth_rad = std::numbers::pi / 3.0,
                        double sidelobe_gain = 0.0) {
    return {AntennaMode::sector, boresight_rad, beamwidth_rad, sidelobe_gain};
  }
};

}  // namespace squant
