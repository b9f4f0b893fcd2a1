#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "squant/estimation.hpp"
#include "squant/sam.hpp"

namespace squant {

/// A granted spectrum allocation, quantified in the space, time and frequency
/// dimensions: the transceiver parameters that control consumption plus the
/// grid cells the network touches.
struct Footprint {
  std::string network_id;
  double allocated_power_w = 0.0;
  int quantum = 0;
  int band = 0;
  TransmitterSpec transmitter;          // at the allocated power
  std::vector<ReceiverSpec> receivers;  // minimum SINR, directionality, location
  struct CellShare {
    CellIndex cell;
    double occupancy_w = 0.0;
    double liability_w = 0.0;
  };
  std::vector<CellShare> cells;  // cells with consumption above the floor
};

enum class PolicyStatus { active, revoked };

struct PolicyEvent {
  enum class Kind { granted, violation, revoked };
  Kind kind = Kind::granted;
  double excess_db = 0.0;
  std::string note;
};

/// Append-only policy record. The status is always derivable by replaying the
/// log.
struct PolicyRecord {
  std::uint64_t id = 0;
  Footprint footprint;
  std::vector<PolicyEvent> log;

  PolicyStatus status() const {
    PolicyStatus st = PolicyStatus::active;
    for (const auto& e : log)
      if (e.kind == PolicyEvent::Kind::revoked) st = PolicyStatus::revoked;
    return st;
  }
};

enum class Verdict { conformant, violation, indeterminate };

struct ConformanceReport {
  Verdict verdict = Verdict::indeterminate;
  double excess_db = 0.0;      // estimated transmit power over the allocation
  double estimated_w = 0.0;
  int n_sensors = 0;
};

const char* verdict_name(Verdict v);

struct RequestOutcome {
  bool admitted = false;
  std::string reason;                    // rejection reason when not admitted
  std::optional<std::uint64_t> record_id;
};

/// In-process policy workflow: schedules footprint requests against the
/// cumulative state of previously granted records and stores the results.
class PolicyStore {
public:
  PolicyStore(Scenario base, SamConfig cfg);

  /// Schedule one request. On admission, quantifies the network's footprint
  /// and appends an active record; the grant becomes part of the interference
  /// state seen by later requests.
  RequestOutcome request_footprint(const AccessRequest& request);

  /// Scenario of the incumbents plus every active grant.
  Scenario granted_scenario() const;

  const std::vector<PolicyRecord>& records() const { return records_; }
  PolicyRecord* find(std::uint64_t id);

  /// Record a verdict in the record's log; a violation revokes the grant.
  void apply_verdict(PolicyRecord& record, const ConformanceReport& report);

private:
  Scenario base_;
  SamConfig cfg_;
  HexGrid grid_;
  std::vector<PolicyRecord> records_;
  std::uint64_t next_id_ = 1;
};

/// Compare the transmit power attributed to the record's transmitter in the
/// estimated maps against the allocation. A violation needs more than
/// tolerance_db of excess; an unattributable transmitter is indeterminate,
/// not a violation. Receiver deviations never raise violations.
ConformanceReport check_conformance(const PolicyRecord& record, const EstimatedMaps& estimated,
                                    double tolerance_db);

std::string policy_record_to_json(const PolicyRecord& record);

}  // namespace squant
