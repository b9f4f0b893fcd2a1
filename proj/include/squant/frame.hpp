#pragma once

#include <vector>

#include "squant/errors.hpp"

namespace squant {

struct Band {
  double center_hz = 600e6;
  double width_hz = 6e6;
};

/// Spectral and temporal discretization: frequency bands and unit time quanta.
/// Both dimensions are index-only; per-band quantities are average powers.
struct SpectrumFrame {
  std::vector<Band> bands{Band{}};
  int quanta = 1;
  double quantum_s = 10.0;

  int band_count() const { return static_cast<int>(bands.size()); }
  int quantum_count() const { return quanta; }

  void validate() const {
    if (bands.empty()) throw ConfigError("frame: need at least one band");
    if (quanta < 1) throw ConfigError("frame: need at least one time quantum");
    for (const auto& b : bands)
      if (!(b.width_hz > 0.0)) throw ConfigError("frame: band width must be positive");
    if (!(quantum_s > 0.0)) throw ConfigError("frame: quantum duration must be positive");
  }
};

}  // namespace squant
