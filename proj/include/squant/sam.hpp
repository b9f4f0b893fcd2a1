#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squant/quantify.hpp"
#include "squant/scenario.hpp"

namespace squant {

enum class Mechanism { underlay, overlay, stov, stppov, nsccx };

const char* mechanism_name(Mechanism m);
std::optional<Mechanism> mechanism_from_name(const std::string& name);

struct SamConfig {
  Mechanism mechanism = Mechanism::underlay;
  /// Detection sensitivity of the overlay-family sensing step.
  double su_sensitivity_dbm = -80.0;
  /// Fixed underlay transmit power: 30 dB above the 6 MHz thermal floor.
  double underlay_power_dbm = -76.0;
  /// Fixed overlay transmit power cap.
  double overlay_power_dbm = 30.0;
  /// Target SINR headroom over beta_min for the dynamic-power mechanisms.
  double stov_margin_db = 10.0;
  /// Allocation headroom for the consumption-ordered scheduler. Kept small:
  /// the admission re-check protects receivers, larger margins only waste
  /// power.
  double nsccx_margin_db = 3.0;
  /// Aggregate-interference guard protecting primary receivers. Defaults to
  /// 10*log10(n_potential_interferers).
  std::optional<double> guard_margin_db;
  bool knows_pu_receivers = false;
  /// Cap on dynamically allocated secondary power.
  double max_su_power_dbm = 30.0;

  double guard_db(int n_potential) const {
    if (guard_margin_db) return *guard_margin_db;
    return n_potential > 1 ? 10.0 * std::log10(static_cast<double>(n_potential)) : 0.0;
  }
};

struct AccessRequest {
  std::string network_id;
  int quantum = 0;
  int band = 0;
};

struct Admission {
  std::string network_id;
  double power_w = 0.0;
};

struct Rejection {
  std::string network_id;
  std::string reason;
};

struct ReceiverSinrReport {
  std::string receiver_id;
  std::string network_id;
  bool primary = false;
  double sinr = 0.0;
  double beta_min = 1.0;
  bool harmed = false;
};

struct ScheduleResult {
  std::vector<Admission> admitted;
  std::vector<Rejection> rejected;
  /// SINR of every operating receiver, recomputed after all admissions.
  std::vector<ReceiverSinrReport> sinrs;

  const Admission* find(const std::string& network_id) const {
    for (const auto& a : admitted)
      if (a.network_id == network_id) return &a;
    return nullptr;
  }
};

/// Distance at which the received power from a transmitter falls to the
/// detection sensitivity, clamped below at 1 m.
double sensing_radius(double p_tx_w, double sensitivity_w, double alpha);

/// True iff any primary transmitter is received at `location` at or above the
/// sensitivity (omnidirectional sensing).
bool pu_detected(Point location, const Scenario& sc, double sensitivity_w);

/// Utilized + forbidden total of the request's network quantified alone on the
/// grid, at the minimum power meeting its receivers' targets with the
/// scheduler headroom and no cochannel interference.
double minimal_consumption(const Network& net, const Scenario& sc, const HexGrid& grid,
                           const SamConfig& cfg);

/// Sequential scheduler for underlay / overlay / stov / stppov; dispatches to
/// the consumption-ordered scheduler for nsccx. Requests are processed in
/// network-id order and allocated against cumulative worst-case interference.
/// `pre_admitted` seeds the interference state with grants made earlier: they
/// emit, their receivers are protected and show up in the SINR report, but
/// they are not listed among the admissions again.
ScheduleResult schedule(const std::vector<AccessRequest>& requests, const SamConfig& cfg,
                        const Scenario& sc, const HexGrid& grid,
                        std::span<const Admission> pre_admitted = {});

/// Greedy coexistence scheduler: admits requests in ascending order of
/// minimal network spectrum consumption, allocating the minimum power that
/// meets each request's own receivers, and only when every operating receiver
/// (primary receivers under the aggregate guard, previously admitted
/// secondary receivers at beta_min) remains satisfied.
ScheduleResult schedule_nsccx(const std::vector<AccessRequest>& requests, const SamConfig& cfg,
                              const Scenario& sc, const HexGrid& grid,
                              std::span<const Admission> pre_admitted = {});

struct SamMetrics {
  int n_scheduled = 0;
  int n_rejected = 0;
  int n_harmed_receivers = 0;
  int n_harmed_pu_receivers = 0;
  double pct_exploited = 0.0;
  double pct_available = 0.0;
  // Spectrum-space taxonomy, in W*cell.
  double lost_available = 0.0;
  double potentially_degraded = 0.0;
  double unexploited = 0.0;
  double degraded = 0.0;
  double correctly_recovered = 0.0;
  double pre_available = 0.0;
  double post_available = 0.0;
};

struct EvaluatedRun {
  ScheduleResult schedule;
  SamMetrics metrics;
};

/// Schedule the scenario's secondary networks under `cfg` and score the
/// outcome against the pre-existing spectrum spaces.
EvaluatedRun evaluate(const SamConfig& cfg, const Scenario& sc, const HexGrid& grid);

/// Scenario after a schedule: primaries plus admitted secondaries at their
/// allocated powers. Rejected networks do not operate.
Scenario apply_schedule(const Scenario& sc, const ScheduleResult& result);

}  // namespace squant
