#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "squant/quantify.hpp"
#include "squant/scenario.hpp"

namespace squant {

/// Rectangular unit-sections over the region, each holding at least one
/// RF-sensor. Shadowing is modeled as uniform within a section.
struct SensorGrid {
  struct Sensor {
    int id = 0;
    Point location;
    int section = 0;
  };

  Point origin;
  double section_w_m = 0.0;
  double section_h_m = 0.0;
  int sections_x = 0;
  int sections_y = 0;
  std::vector<Sensor> sensors;

  int section_count() const { return sections_x * sections_y; }

  int section_of(Point p) const;

  /// Regular deployment: per_section sensors on a centered sub-grid inside
  /// every section. per_section must be >= 1.
  static SensorGrid regular(Point origin, double width_m, double height_m, int sections_x,
                            int sections_y, int per_section);
};

/// Received power per transmitter as attributed by one sensor. Signal
/// separation is assumed upstream; measurements arrive already attributed.
struct Measurement {
  int sensor_id = 0;
  std::vector<double> per_tx_w;  // scenario transmitter order
  double noise_floor_w = 0.0;
};

struct SectionPropagationEstimate {
  double alpha_hat = 0.0;
  double shadow_db = 0.0;
  bool underdetermined = false;
};

struct PropagationEstimate {
  std::vector<SectionPropagationEstimate> sections;
  SectionPropagationEstimate region;  // pooled fit over all sections

  double gain(int section, double distance_m) const;
  double shadow_factor(int section) const;
};

std::vector<const TransmitterSpec*> transmitters_of(const Scenario& sc);

/// Per sensor, per transmitter: the physical received power perturbed by
/// i.i.d. log-normal shadowing of the given sigma. Deterministic per seed.
std::vector<Measurement> simulate_measurements(const Scenario& sc, const SensorGrid& sensors,
                                               double shadow_sigma_db, std::uint64_t seed);

/// Per-section least-squares fit of received dB against 10*log10(d): the
/// negated slope estimates the path-loss exponent, the intercept the section
/// shadowing offset. Sections with fewer than two usable samples are flagged
/// and inherit the region-wide fit. Transmitters listed in `exclude_txs` (by
/// index) contribute no samples; an audited transmitter is excluded so its own
/// declared power cannot calibrate the fit used to judge it.
PropagationEstimate estimate_propagation(std::span<const Measurement> measurements,
                                         const SensorGrid& sensors,
                                         std::span<const TransmitterSpec* const> known_txs,
                                         std::span<const std::size_t> exclude_txs = {});

struct TxPowerEstimate {
  double power_w = 0.0;
  int n_sensors = 0;  // zero means unattributable
};

/// Back-solve one transmitter's power from the sensors that hear it:
/// inverse-distance-weighted dB mean, nearest sensors first. `max_sensors`
/// caps the count; 0 uses every attributing sensor.
TxPowerEstimate estimate_tx_power(std::size_t tx_index, std::span<const Measurement> measurements,
                                  const SensorGrid& sensors,
                                  std::span<const TransmitterSpec* const> known_txs,
                                  const PropagationEstimate& prop, int max_sensors = 0);

struct EstimationInputs {
  std::vector<TransmitterSpec> known_txs;    // declared positions and antennas
  std::vector<ReceiverSpec> declared_rxs;    // receiver parameters from footprints
  PowerBounds bounds;
  BoundForm bound_form = BoundForm::inverse;
  /// Cells whose nearest sensor is farther than this are low-confidence and
  /// filled by inverse-distance fusion of the three nearest sensors.
  double fusion_radius_m = 0.0;  // 0 = 1.5x section diagonal
};

struct EstimatedMaps {
  ConsumptionMap map;
  std::vector<double> confidence;                      // one entry per cell
  std::map<std::string, TxPowerEstimate> tx_powers;    // by transmitter id
};

/// Spatially fuse the measurements into estimated occupancy / opportunity /
/// liability maps on the grid.
EstimatedMaps estimate_maps(std::span<const Measurement> measurements, const SensorGrid& sensors,
                            const PropagationEstimate& prop, const EstimationInputs& inputs,
                            const HexGrid& grid);

struct MapErrorStats {
  double mean_abs_occupancy_db = 0.0;
  double max_abs_occupancy_db = 0.0;
  /// [truth availability][estimated availability] cell counts, where a cell is
  /// "available" when its opportunity is positive.
  std::int64_t availability_confusion[2][2] = {{0, 0}, {0, 0}};
};

/// Symmetric map-accuracy score; zero iff the maps are identical.
MapErrorStats map_error(const ConsumptionMap& estimated, const ConsumptionMap& truth,
                        double floor_w = 1e-23);

}  // namespace squant
