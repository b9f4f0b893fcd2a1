#include "squant/policy.hpp"

#include <json.hpp>

#include "squant/units.hpp"

namespace squant {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::conformant: return "conformant";
    case Verdict::violation: return "violation";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

PolicyStore::PolicyStore(Scenario base, SamConfig cfg)
    : base_(std::move(base)), cfg_(std::move(cfg)), grid_(base_.grid.build()) {
  base_.validate();
}

Scenario PolicyStore::granted_scenario() const {
  Scenario sc = base_;
  sc.networks.clear();
  for (const auto& n : base_.networks)
    if (n.role == NetworkRole::primary) sc.networks.push_back(n);
  for (const auto& rec : records_) {
    if (rec.status() != PolicyStatus::active) continue;
    const Network* n = base_.find_network(rec.footprint.network_id);
    if (n == nullptr) continue;
    Network granted = *n;
    granted.transmitter.tx_power_w = rec.footprint.allocated_power_w;
    sc.networks.push_back(std::move(granted));
  }
  return sc;
}

RequestOutcome PolicyStore::request_footprint(const AccessRequest& request) {
  const Network* net = base_.find_network(request.network_id);
  if (net == nullptr || net->role != NetworkRole::secondary)
    return {false, "unknown secondary network", std::nullopt};
  for (const auto& rec : records_)
    if (rec.footprint.network_id == request.network_id && rec.status() == PolicyStatus::active)
      return {false, "network already holds an active footprint", std::nullopt};

  // Schedule the new request against the incumbents plus the active grants,
  // whose emissions and receivers are seeded into the interference state.
  std::vector<Admission> grants;
  for (const auto& rec : records_)
    if (rec.status() == PolicyStatus::active)
      grants.push_back({rec.footprint.network_id, rec.footprint.allocated_power_w});
  const ScheduleResult res = schedule({{request}}, cfg_, base_, grid_, grants);
  const Admission* adm = res.find(request.network_id);
  if (adm == nullptr) {
    std::string reason = "rejected";
    for (const auto& r : res.rejected)
      if (r.network_id == request.network_id) reason = r.reason;
    return {false, reason, std::nullopt};
  }

  PolicyRecord rec;
  rec.id = next_id_++;
  rec.footprint.network_id = net->id;
  rec.footprint.allocated_power_w = adm->power_w;
  rec.footprint.quantum = request.quantum;
  rec.footprint.band = request.band;
  rec.footprint.transmitter = net->transmitter;
  rec.footprint.transmitter.tx_power_w = adm->power_w;
  rec.footprint.receivers = net->receivers;

  // Quantified per-cell consumption of the grant alone.
  Scenario iso = base_;
  iso.networks.clear();
  Network alone = *net;
  alone.transmitter.tx_power_w = adm->power_w;
  iso.networks.push_back(std::move(alone));
  const ConsumptionMap map = aggregate(iso, grid_);
  for (const auto& c : map.cells)
    if (c.occupancy_w > base_.bounds.p_min_w || c.liability_w > 0.0)
      rec.footprint.cells.push_back({c.cell, c.occupancy_w, c.liability_w});

  rec.log.push_back({PolicyEvent::Kind::granted, 0.0, "footprint granted"});
  records_.push_back(std::move(rec));
  return {true, "", records_.back().id};
}

PolicyRecord* PolicyStore::find(std::uint64_t id) {
  for (auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

void PolicyStore::apply_verdict(PolicyRecord& record, const ConformanceReport& report) {
  if (report.verdict == Verdict::violation) {
    record.log.push_back({PolicyEvent::Kind::violation, report.excess_db, "non-conformant emission"});
    record.log.push_back({PolicyEvent::Kind::revoked, 0.0, "footprint revoked"});
  }
}

ConformanceReport check_conformance(const PolicyRecord& record, const EstimatedMaps& estimated,
                                    double tolerance_db) {
  ConformanceReport rep;
  const auto it = estimated.tx_powers.find(record.footprint.transmitter.id);
  if (it == estimated.tx_powers.end() || it->second.n_sensors == 0) {
    rep.verdict = Verdict::indeterminate;
    return rep;
  }
  rep.n_sensors = it->second.n_sensors;
  rep.estimated_w = it->second.power_w;
  rep.excess_db =
      watt_to_dbm(rep.estimated_w) - watt_to_dbm(record.footprint.allocated_power_w);
  rep.verdict = rep.excess_db > tolerance_db ? Verdict::violation : Verdict::conformant;
  return rep;
}

std::string policy_record_to_json(const PolicyRecord& record) {
  nlohmann::json j;
  j["id"] = record.id;
  j["status"] = record.status() == PolicyStatus::active ? "active" : "revoked";
  j["footprint"] = {
      {"network_id", record.footprint.network_id},
      {"allocated_power_dbm", watt_to_dbm(record.footprint.allocated_power_w)},
      {"quantum", record.footprint.quantum},
      {"band", record.footprint.band},
      {"transmitter",
       {{"id", record.footprint.transmitter.id},
        {"x_m", record.footprint.transmitter.location.x},
        {"y_m", record.footprint.transmitter.location.y}}},
  };
  nlohmann::json rxs = nlohmann::json::array();
  for (const auto& r : record.footprint.receivers)
    rxs.push_back({{"id", r.id},
                   {"x_m", r.location.x},
                   {"y_m", r.location.y},
                   {"beta_min_db", linear_to_db(r.beta_min)}});
  j["footprint"]["receivers"] = rxs;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : record.footprint.cells)
    cells.push_back({{"col", c.cell.col},
                     {"row", c.cell.row},
                     {"occupancy_w", c.occupancy_w},
                     {"liability_w", c.liability_w}});
  j["footprint"]["cells"] = cells;
  nlohmann::json log = nlohmann::json::array();
  for (const auto& e : record.log) {
    const char* kind = e.kind == PolicyEvent::Kind::granted
                           ? "granted"
                           : e.kind == PolicyEvent::Kind::violation ? "violation" : "revoked";
    log.push_back({{"kind", kind}, {"excess_db", e.excess_db}, {"note", e.note}});
  }
  j["log"] = log;
  return j.dump(2);
}

}  // namespace squant
