#pragma once

#include <cmath>

#include "squant/errors.hpp"

namespace squant {

/// Large-scale distance-dependent path loss. The path gain is
/// min{1, d^-alpha}: received power never exceeds transmitted power, and the
/// clamp also absorbs the d -> 0 singularity.
struct PropagationModel {
  double alpha = 3.5;

  double gain(double distance_m) const {
    if (distance_m <= 1.0) return 1.0;
    return std::pow(distance_m, -alpha);
  }

  void validate() const {
    if (!(alpha > 2.0)) throw ConfigError("propagation: path-loss exponent must exceed 2");
  }
};

/// Direction of the receiver-imposed transmit-power bound as a function of
/// distance. `inverse` divides the interference margin by the path gain, so a
/// cochannel transmitter may exercise higher power farther from the receiver.
/// `attenuated` multiplies instead, shrinking the bound with distance; kept
/// for documentation experiments.
enum class BoundForm { inverse, attenuated };

}  // namespace squant
