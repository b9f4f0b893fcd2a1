#include "squant/sam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "squant/units.hpp"

namespace squant {

namespace {

constexpr double kSinrSlack = 1.0 - 1e-9;  // tolerance for meets-beta checks

/// Largest beta_min among the network's receivers; 1 when it has none. The
/// dynamic mechanisms aim their headroom above this.
double receivers_beta(const Network& net) {
  double b = 1.0;
  for (const auto& rx : net.receivers) b = std::max(b, rx.beta_min);
  return b;
}

struct Emitter {
  std::string tx_id;
  Point location;
  double power_w;
};

struct OperatingReceiver {
  const ReceiverSpec* spec;
  const Network* network;
  const TransmitterSpec* serving;
  double margin_w = 0.0;  // interference margin with zero cochannel interference
};

/// Cumulative scheduling state. Interference accounting assumes worst-case
/// antenna alignment: emissions reach receivers through the path gain alone.
struct Engine {
  const Scenario& sc;
  const SamConfig& cfg;
  std::vector<OperatingReceiver> pu_receivers;
  std::vector<OperatingReceiver> su_receivers;  // receivers of admitted requests
  std::vector<Emitter> emitters;                // primary txs + admitted SU txs
  std::map<std::string, double> admitted_power;
  int n_admitted = 0;
  double guard_db = 0.0;
  double cap_w = 0.0;

  Engine(const Scenario& s, const SamConfig& c, int n_potential) : sc(s), cfg(c) {
    guard_db = c.guard_db(n_potential);
    if (guard_db < 0.0) throw ConfigError("schedule: guard margin must be >= 0 dB");
    cap_w = std::min(dbm_to_watt(c.max_su_power_dbm), s.bounds.p_max_w);
    for (const Network* p : s.primaries()) {
      emitters.push_back({p->transmitter.id, p->transmitter.location, p->transmitter.tx_power_w});
      for (const auto& rx : p->receivers) {
        const InterferenceMargin im = interference_margin(rx, p->transmitter, sc.prop);
        pu_receivers.push_back({&rx, p, &p->transmitter, im.watts});
      }
    }
  }

  double interference_at(Point p, const std::string& excluding_tx_id) const {
    double sum = 0.0;
    for (const auto& e : emitters) {
      if (e.tx_id == excluding_tx_id) continue;
      sum += e.power_w * sc.prop.gain(distance(e.location, p));
    }
    return sum;
  }

  double serving_gain(const ReceiverSpec& rx, const TransmitterSpec& tx) const {
    return tx.antenna.gain_toward(tx.location, rx.location) *
           rx.antenna.gain_toward(rx.location, tx.location) *
           sc.prop.gain(distance(tx.location, rx.location));
  }

  double allocated_or_declared(const OperatingReceiver& r) const {
    const auto it = admitted_power.find(r.network->id);
    return it == admitted_power.end() ? r.serving->tx_power_w : it->second;
  }

  /// SINR of an operating receiver, optionally with a candidate emission added.
  double sinr_of(const OperatingReceiver& r, const Point* extra_tx = nullptr,
                 double extra_w = 0.0) const {
    const ReceiverSpec& rx = *r.spec;
    const double s = rx.experienced_sinr
                         ? *rx.experienced_sinr * rx.noise_w
                         : allocated_or_declared(r) * serving_gain(rx, *r.serving);
    double i = interference_at(rx.location, r.serving->id);
    if (extra_tx != nullptr) i += extra_w * sc.prop.gain(distance(*extra_tx, rx.location));
    return s / (rx.noise_w + i);
  }

  /// Minimum power meeting target_sinr at every receiver of the network under
  /// the current interference state. Infinity when a link is broken.
  double required_power(const Network& net, double target_sinr) const {
    double p = 0.0;
    for (const auto& rx : net.receivers) {
      const double g = serving_gain(rx, net.transmitter);
      if (!(g > 0.0)) return std::numeric_limits<double>::infinity();
      const double i = interference_at(rx.location, net.transmitter.id);
      p = std::max(p, target_sinr * (rx.noise_w + i) / g);
    }
    return p;
  }

  /// Guarded interference budget of a primary receiver.
  double pu_budget(const OperatingReceiver& r) const {
    return r.margin_w * db_to_linear(-guard_db);
  }

  void admit(const Network& net, double power_w) {
    emitters.push_back({net.transmitter.id, net.transmitter.location, power_w});
    admitted_power[net.id] = power_w;
    ++n_admitted;
    for (const auto& rx : net.receivers) su_receivers.push_back({&rx, &net, &net.transmitter, 0.0});
  }

  void finalize_sinrs(ScheduleResult& out) const {
    auto report = [&](const OperatingReceiver& r, bool primary) {
      ReceiverSinrReport rep;
      rep.receiver_id = r.spec->id;
      rep.network_id = r.network->id;
      rep.primary = primary;
      rep.beta_min = r.spec->beta_min;
      rep.sinr = sinr_of(r);
      rep.harmed = rep.sinr < r.spec->beta_min * kSinrSlack;
      out.sinrs.push_back(rep);
    };
    for (const auto& r : pu_receivers) report(r, true);
    for (const auto& r : su_receivers) report(r, false);
  }
};

std::vector<AccessRequest> sorted_by_id(std::vector<AccessRequest> reqs) {
  std::sort(reqs.begin(), reqs.end(), [](const AccessRequest& a, const AccessRequest& b) {
    return a.network_id < b.network_id;
  });
  return reqs;
}

void seed_pre_admissions(Engine& eng, const Scenario& sc, std::span<const Admission> pre) {
  for (const Admission& a : pre) {
    const Network* net = sc.find_network(a.network_id);
    if (net != nullptr) eng.admit(*net, a.power_w);
  }
}

ScheduleResult schedule_sequential(const std::vector<AccessRequest>& requests, const SamConfig& cfg,
                                   const Scenario& sc, std::span<const Admission> pre_admitted) {
  ScheduleResult result;
  Engine eng(sc, cfg, static_cast<int>(requests.size() + pre_admitted.size()));
  seed_pre_admissions(eng, sc, pre_admitted);
  const double sensitivity_w = dbm_to_watt(cfg.su_sensitivity_dbm);

  for (const AccessRequest& req : sorted_by_id(requests)) {
    const Network* net = sc.find_network(req.network_id);
    if (net == nullptr || net->role != NetworkRole::secondary) {
      result.rejected.push_back({req.network_id, "unknown secondary network"});
      continue;
    }
    double power = 0.0;
    bool rejected = false;
    switch (cfg.mechanism) {
      case Mechanism::underlay:
        power = std::min(dbm_to_watt(cfg.underlay_power_dbm), sc.bounds.p_max_w);
        break;
      case Mechanism::overlay:
        if (pu_detected(net->transmitter.location, sc, sensitivity_w)) {
          result.rejected.push_back({req.network_id, "primary transmitter detected"});
          rejected = true;
          break;
        }
        power = std::min(dbm_to_watt(cfg.overlay_power_dbm), sc.bounds.p_max_w);
        break;
      case Mechanism::stov: {
        if (pu_detected(net->transmitter.location, sc, sensitivity_w)) {
          result.rejected.push_back({req.network_id, "primary transmitter detected"});
          rejected = true;
          break;
        }
        const double target = db_to_linear(cfg.stov_margin_db) * receivers_beta(*net);
        power = eng.required_power(*net, target);
        if (power > eng.cap_w) {
          result.rejected.push_back({req.network_id, "required power exceeds cap"});
          rejected = true;
        }
        break;
      }
      case Mechanism::stppov: {
        const double target = db_to_linear(cfg.stov_margin_db) * receivers_beta(*net);
        power = eng.required_power(*net, target);
        double cap = eng.cap_w;
        for (const auto& r : eng.pu_receivers) {
          const double slice = eng.pu_budget(r) / static_cast<double>(eng.n_admitted + 1);
          const double g = sc.prop.gain(distance(net->transmitter.location, r.spec->location));
          cap = std::min(cap, slice / g);
        }
        if (power > cap) {
          result.rejected.push_back({req.network_id, "required power exceeds primary-protection cap"});
          rejected = true;
        }
        break;
      }
      case Mechanism::nsccx:
        throw ConfigError("schedule: use schedule_nsccx for the nsccx mechanism");
    }
    if (rejected) continue;
    eng.admit(*net, power);
    result.admitted.push_back({net->id, power});
  }

  eng.finalize_sinrs(result);
  return result;
}

}  // namespace

const char* mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::underlay: return "underlay";
    case Mechanism::overlay: return "overlay";
    case Mechanism::stov: return "stov";
    case Mechanism::stppov: return "stppov";
    case Mechanism::nsccx: return "nsccx";
  }
  return "unknown";
}

std::optional<Mechanism> mechanism_from_name(const std::string& name) {
  if (name == "underlay") return Mechanism::underlay;
  if (name == "overlay") return Mechanism::overlay;
  if (name == "stov") return Mechanism::stov;
  if (name == "stppov") return Mechanism::stppov;
  if (name == "nsccx") return Mechanism::nsccx;
  return std::nullopt;
}

double sensing_radius(double p_tx_w, double sensitivity_w, double alpha) {
  if (!(sensitivity_w > 0.0)) throw ConfigError("sensing_radius: sensitivity must be positive");
  return std::max(1.0, std::pow(p_tx_w / sensitivity_w, 1.0 / alpha));
}

bool pu_detected(Point location, const Scenario& sc, double sensitivity_w) {
  for (const Network* p : sc.primaries()) {
    const double rcv = p->transmitter.tx_power_w *
                       p->transmitter.antenna.gain_toward(p->transmitter.location, location) *
                       sc.prop.gain(distance(p->transmitter.location, location));
    if (rcv >= sensitivity_w) return true;
  }
  return false;
}

double minimal_consumption(const Network& net, const Scenario& sc, const HexGrid& grid,
                           const SamConfig& cfg) {
  Scenario iso;
  iso.bounds = sc.bounds;
  iso.prop = sc.prop;
  iso.bound_form = sc.bound_form;
  iso.ambient_noise_w = sc.ambient_noise_w;
  iso.grid = {grid.side(), grid.cols(), grid.rows(), grid.origin()};
  Network alone = net;
  alone.bands.clear();
  alone.quanta.clear();
  if (!alone.receivers.empty()) {
    const double target = db_to_linear(cfg.nsccx_margin_db);
    double p = 0.0;
    for (const auto& rx : alone.receivers) {
      const double g =
          alone.transmitter.antenna.gain_toward(alone.transmitter.location, rx.location) *
          rx.antenna.gain_toward(rx.location, alone.transmitter.location) *
          sc.prop.gain(distance(alone.transmitter.location, rx.location));
      if (!(g > 0.0)) return std::numeric_limits<double>::infinity();
      p = std::max(p, target * rx.beta_min * rx.noise_w / g);
    }
    alone.transmitter.tx_power_w = std::min(p, sc.bounds.p_max_w);
  }
  iso.networks.push_back(std::move(alone));
  const ConsumptionMap map = aggregate(iso, grid);
  return map.totals.utilized + map.totals.forbidden;
}

ScheduleResult schedule_nsccx(const std::vector<AccessRequest>& requests, const SamConfig& cfg,
                              const Scenario& sc, const HexGrid& grid,
                              std::span<const Admission> pre_admitted) {
  if (!cfg.knows_pu_receivers)
    throw ConfigError("schedule_nsccx: requires knowledge of the primary receiver positions");

  ScheduleResult result;
  Engine eng(sc, cfg, static_cast<int>(requests.size() + pre_admitted.size()));
  seed_pre_admissions(eng, sc, pre_admitted);

  // Ascending minimal network spectrum consumption, ties by id.
  std::vector<std::pair<double, AccessRequest>> order;
  for (const AccessRequest& req : requests) {
    const Network* net = sc.find_network(req.network_id);
    if (net == nullptr || net->role != NetworkRole::secondary) {
      result.rejected.push_back({req.network_id, "unknown secondary network"});
      continue;
    }
    order.emplace_back(minimal_consumption(*net, sc, grid, cfg), req);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.network_id < b.second.network_id;
  });

  for (const auto& [key, req] : order) {
    const Network* net = sc.find_network(req.network_id);
    const double target = db_to_linear(cfg.nsccx_margin_db) * receivers_beta(*net);
    const double power = eng.required_power(*net, target);
    if (power > eng.cap_w) {
      result.rejected.push_back({req.network_id, "required power exceeds cap"});
      continue;
    }
    bool ok = true;
    // Primary receivers: aggregate interference within the guarded budget.
    for (const auto& r : eng.pu_receivers) {
      const double after =
          eng.interference_at(r.spec->location, r.serving->id) +
          power * sc.prop.gain(distance(net->transmitter.location, r.spec->location));
      if (after > eng.pu_budget(r)) {
        ok = false;
        break;
      }
    }
    // Previously admitted secondary receivers keep beta_min.
    if (ok) {
      for (const auto& r : eng.su_receivers) {
        if (eng.sinr_of(r, &net->transmitter.location, power) < r.spec->beta_min * kSinrSlack) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      result.rejected.push_back({req.network_id, "coexistence check failed"});
      continue;
    }
    eng.admit(*net, power);
    result.admitted.push_back({net->id, power});
  }

  eng.finalize_sinrs(result);
  return result;
}

ScheduleResult schedule(const std::vector<AccessRequest>& requests, const SamConfig& cfg,
                        const Scenario& sc, const HexGrid& grid,
                        std::span<const Admission> pre_admitted) {
  if (cfg.mechanism == Mechanism::nsccx) return schedule_nsccx(requests, cfg, sc, grid, pre_admitted);
  return schedule_sequential(requests, cfg, sc, pre_admitted);
}

Scenario apply_schedule(const Scenario& sc, const ScheduleResult& result) {
  Scenario out = sc;
  out.networks.clear();
  for (const auto& n : sc.networks) {
    if (n.role == NetworkRole::primary) {
      out.networks.push_back(n);
      continue;
    }
    if (const Admission* a = result.find(n.id)) {
      Network m = n;
      m.transmitter.tx_power_w = a->power_w;
      out.networks.push_back(std::move(m));
    }
  }
  return out;
}

EvaluatedRun evaluate(const SamConfig& cfg, const Scenario& sc, const HexGrid& grid) {
  std::vector<AccessRequest> requests;
  for (const Network* n : sc.secondaries()) requests.push_back({n->id, 0, 0});

  EvaluatedRun run;
  run.schedule = schedule(requests, cfg, sc, grid);

  // Pre-existing spectrum spaces: primaries only.
  Scenario pre = sc;
  pre.networks.clear();
  for (const auto& n : sc.networks)
    if (n.role == NetworkRole::primary) pre.networks.push_back(n);
  const ConsumptionMap map0 = aggregate(pre, grid);

  const Scenario post = apply_schedule(sc, run.schedule);
  const ConsumptionMap map1 = aggregate(post, grid);

  SamMetrics& m = run.metrics;
  m.n_scheduled = static_cast<int>(run.schedule.admitted.size());
  m.n_rejected = static_cast<int>(run.schedule.rejected.size());
  for (const auto& rep : run.schedule.sinrs) {
    if (!rep.harmed) continue;
    ++m.n_harmed_receivers;
    if (rep.primary) ++m.n_harmed_pu_receivers;
  }
  m.pre_available = map0.totals.available;
  m.post_available = map1.totals.available;
  m.pct_available = 100.0 * map1.totals.available / map1.totals.total;
  if (map0.totals.available > 0.0)
    m.pct_exploited = std::min(
        100.0, 100.0 * (map0.totals.available - map1.totals.available) / map0.totals.available);

  // The mechanism's own judgment of the recoverable power per cell.
  const double sens_w = dbm_to_watt(cfg.su_sensitivity_dbm);
  const double cap_w = std::min(dbm_to_watt(cfg.max_su_power_dbm), sc.bounds.p_max_w);
  const double guard = cfg.guard_db(static_cast<int>(requests.size()));
  std::vector<std::pair<Point, double>> pu_rx_budget;
  for (const Network* p : pre.primaries())
    for (const auto& rx : p->receivers) {
      const InterferenceMargin im = interference_margin(rx, p->transmitter, sc.prop);
      pu_rx_budget.emplace_back(rx.location, im.watts * db_to_linear(-guard));
    }
  auto judged_at = [&](Point pt) {
    switch (cfg.mechanism) {
      case Mechanism::underlay:
        return std::min(dbm_to_watt(cfg.underlay_power_dbm), sc.bounds.p_max_w);
      case Mechanism::overlay:
        return pu_detected(pt, sc, sens_w)
                   ? 0.0
                   : std::min(dbm_to_watt(cfg.overlay_power_dbm), sc.bounds.p_max_w);
      case Mechanism::stov:
        return pu_detected(pt, sc, sens_w) ? 0.0 : cap_w;
      case Mechanism::stppov:
      case Mechanism::nsccx: {
        double j = cap_w;
        for (const auto& [loc, budget] : pu_rx_budget)
          j = std::min(j, interferer_power_bound(budget, distance(pt, loc), sc.prop, sc.bound_form));
        return j;
      }
    }
    return 0.0;
  };

  // Exercised power per cell: allocated emissions of admitted requests.
  std::map<std::int64_t, double> exercised;
  for (const auto& a : run.schedule.admitted) {
    const Network* n = sc.find_network(a.network_id);
    exercised[grid.flat_index(grid.locate(n->transmitter.location))] += a.power_w;
  }

  KahanSum lost, potential, unexploited, recovered;
  for (std::int64_t i = 0; i < grid.cell_count(); ++i) {
    const double truth = std::max(0.0, map0.cells[i].opportunity_w);
    const double judged = judged_at(grid.center(grid.cell_at(i)));
    lost.add(std::max(0.0, truth - judged));
    potential.add(std::max(0.0, judged - truth));
    const double correct = std::min(truth, judged);
    recovered.add(correct);
    const auto it = exercised.find(i);
    unexploited.add(std::max(0.0, correct - (it == exercised.end() ? 0.0 : it->second)));
  }
  m.lost_available = lost.value();
  m.potentially_degraded = potential.value();
  m.unexploited = unexploited.value();
  m.correctly_recovered = recovered.value();

  std::set<std::int64_t> degraded_cells;
  for (const auto& rep : run.schedule.sinrs) {
    if (!rep.harmed) continue;
    const Network* n = sc.find_network(rep.network_id);
    for (const auto& rx : n->receivers)
      if (rx.id == rep.receiver_id)
        degraded_cells.insert(grid.flat_index(grid.locate(rx.location)));
  }
  m.degraded = sc.bounds.p_max_w * static_cast<double>(degraded_cells.size());
  return run;
}

}  // namespace squant
