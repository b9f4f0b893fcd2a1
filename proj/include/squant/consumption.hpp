#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "squant/devices.hpp"
#include "squant/propagation.hpp"

namespace squant {

/// Spectrum consumption at a single point: occupancy (power received from
/// transmitters plus ambient noise), opportunity (maximum additional power
/// emittable without harming any cochannel receiver, may be negative) and
/// liability (power denied to potential transmitters by receivers). The three
/// always sum to p_max.
struct PointConsumption {
  double occupancy_w = 0.0;
  double opportunity_w = 0.0;
  double liability_w = 0.0;
};

/// Power received from `tx` at `point`: P_t, reduced by the transmit antenna
/// pattern and the path gain. Never exceeds P_t.
inline double received_power(const TransmitterSpec& tx, Point point, const PropagationModel& prop) {
  return tx.tx_power_w * tx.antenna.gain_toward(tx.location, point) *
         prop.gain(distance(tx.location, point));
}

/// Aggregate power received at a point from all transmitters plus ambient noise.
inline double occupancy_at(Point point, std::span<const TransmitterSpec> txs,
                           double ambient_noise_w, const PropagationModel& prop) {
  double sum = ambient_noise_w;
  for (const auto& tx : txs) sum += received_power(tx, point, prop);
  return sum;
}

/// Signal power a receiver sees from its serving transmitter. When the
/// receiver carries an experienced SINR, the signal is experienced_sinr * W_r;
/// otherwise it is the physical link budget through both antenna patterns.
inline double serving_signal_power(const ReceiverSpec& rx, const TransmitterSpec& serving,
                                   const PropagationModel& prop) {
  if (rx.experienced_sinr) return *rx.experienced_sinr * rx.noise_w;
  return serving.tx_power_w * serving.antenna.gain_toward(serving.location, rx.location) *
         rx.antenna.gain_toward(rx.location, serving.location) *
         prop.gain(distance(serving.location, rx.location));
}

struct InterferenceMargin {
  double watts = 0.0;
  /// True when the receiver cannot meet beta_min even with zero interference.
  bool starved = false;
};

/// Interference a receiver can absorb while keeping SINR >= beta_min:
/// S / beta - W_r, clamped below at zero. A starved receiver denies everything
/// it can; incursion is tracked through negative opportunity, not negative IM.
inline InterferenceMargin interference_margin(const ReceiverSpec& rx, const TransmitterSpec& serving,
                                              const PropagationModel& prop) {
  const double s = serving_signal_power(rx, serving, prop);
  const double margin = s / rx.beta_min - rx.noise_w;
  if (margin < 0.0) return {0.0, true};
  return {margin, false};
}

/// Receiver-imposed bound on the transmit power of an interferer at spatial
/// separation `distance_m`, assuming worst-case antenna alignment. Equals the
/// interference margin at zero separation and is non-decreasing in distance
/// under the inverse form.
inline double interferer_power_bound(double margin_w, double distance_m,
                                     const PropagationModel& prop,
                                     BoundForm form = BoundForm::inverse) {
  const double g = prop.gain(distance_m);
  return form == BoundForm::inverse ? margin_w / g : margin_w * g;
}

/// Interference opportunity a receiver leaves at a point: the remaining margin
/// (margin minus aggregate interference already experienced) translated to
/// transmit power at that point. Negative when the margin is overrun.
inline double interference_opportunity(double margin_w, double aggregate_at_rx_w,
                                       double distance_m, const PropagationModel& prop,
                                       BoundForm form = BoundForm::inverse) {
  const double g = prop.gain(distance_m);
  const double remaining = margin_w - aggregate_at_rx_w;
  return form == BoundForm::inverse ? remaining / g : remaining * g;
}

/// Snapshot of one cochannel receiver for opportunity evaluation: its
/// interference margin and the aggregate interference it currently experiences.
struct ReceiverState {
  Point location;
  double margin_w = 0.0;
  double aggregate_w = 0.0;
};

/// Spectrum opportunity at a point: the headroom to p_max, further limited by
/// every cochannel receiver's interference opportunity. Incursion depth is
/// floored at -(p_max - p_min) so all point quantities stay within the
/// representable power range.
inline double opportunity_at(Point point, std::span<const ReceiverState> receivers,
                             double occupancy_w, const PowerBounds& bounds,
                             const PropagationModel& prop, BoundForm form = BoundForm::inverse) {
  double opportunity = bounds.p_max_w - occupancy_w;
  for (const auto& rx : receivers) {
    const double d = distance(rx.location, point);
    opportunity = std::min(
        opportunity, interference_opportunity(rx.margin_w, rx.aggregate_w, d, prop, form));
  }
  return std::max(opportunity, -(bounds.p_max_w - bounds.p_min_w));
}

/// Power denied to potential transmitters: p_max - (occupancy + opportunity).
/// Non-negative under the opportunity cap; exceeds p_max - occupancy exactly
/// when the opportunity is negative.
inline double liability_at(double occupancy_w, double opportunity_w, const PowerBounds& bounds) {
  return bounds.p_max_w - (occupancy_w + opportunity_w);
}

inline PointConsumption consumption_at(Point point, std::span<const TransmitterSpec> txs,
                                       std::span<const ReceiverState> receivers,
                                       double ambient_noise_w, const PowerBounds& bounds,
                                       const PropagationModel& prop,
                                       BoundForm form = BoundForm::inverse) {
  PointConsumption c;
  c.occupancy_w = occupancy_at(point, txs, ambient_noise_w, prop);
  c.opportunity_w = opportunity_at(point, receivers, c.occupancy_w, bounds, prop, form);
  c.liability_w = liability_at(c.occupancy_w, c.opportunity_w, bounds);
  return c;
}

}  // namespace squant
