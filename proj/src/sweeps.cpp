#include "squant/sweeps.hpp"

#include <fstream>
#include <map>

#include "squant/errors.hpp"
#include "squant/map_io.hpp"
#include "squant/units.hpp"

namespace squant {

std::vector<CompareRow> compare_sams(std::span<const Mechanism> mechanisms,
                                     std::span<const int> n_secondary_list, int n_seeds,
                                     std::uint64_t seed_base, const TopologyParams& base,
                                     const SamConfig& base_cfg) {
  std::vector<CompareRow> rows;
  for (int n : n_secondary_list) {
    for (int s = 0; s < n_seeds; ++s) {
      TopologyParams params = base;
      params.n_secondary = n;
      params.seed = seed_base + static_cast<std::uint64_t>(s);
      const Scenario sc = generate_topology(params);
      const HexGrid grid = sc.grid.build();
      for (Mechanism mech : mechanisms) {
        SamConfig cfg = base_cfg;
        cfg.mechanism = mech;
        cfg.knows_pu_receivers =
            mech == Mechanism::stppov || mech == Mechanism::nsccx || cfg.knows_pu_receivers;
        rows.push_back({mech, n, params.seed, evaluate(cfg, sc, grid).metrics});
      }
    }
  }
  return rows;
}

std::vector<RecoveryRow> recovery_sweep(const Scenario& sc, const HexGrid& grid,
                                        std::span<const double> sensitivities_dbm,
                                        std::span<const double> caps_dbm) {
  // Pre-existing availability: primaries (if any) only.
  Scenario pre = sc;
  pre.networks.clear();
  for (const auto& n : sc.networks)
    if (n.role == NetworkRole::primary) pre.networks.push_back(n);
  const ConsumptionMap map0 = aggregate(pre, grid);

  // Every secondary device is a potential emitter at its own location.
  std::vector<Point> devices;
  for (const Network* n : sc.secondaries()) {
    devices.push_back(n->transmitter.location);
    for (const auto& rx : n->receivers) devices.push_back(rx.location);
  }

  std::vector<RecoveryRow> rows;
  for (double sens_dbm : sensitivities_dbm) {
    const double sens_w = dbm_to_watt(sens_dbm);
    for (double cap_dbm : caps_dbm) {
      const double cap_w = std::min(dbm_to_watt(cap_dbm), sc.bounds.p_max_w);
      std::map<std::int64_t, double> granted;  // cell -> sum of granted caps
      for (const Point& dev : devices)
        if (!pu_detected(dev, sc, sens_w)) granted[grid.flat_index(grid.locate(dev))] += cap_w;
      KahanSum rec;
      for (const auto& [cell, sum] : granted) {
        const double avail = std::max(0.0, map0.cells[cell].opportunity_w);
        rec.add(std::min(avail, sum));
      }
      RecoveryRow row;
      row.sensitivity_dbm = sens_dbm;
      row.max_su_power_dbm = cap_dbm;
      row.recovered_w_cell = rec.value();
      row.available_w_cell = map0.totals.available;
      row.recovered_pct =
          map0.totals.available > 0.0 ? 100.0 * row.recovered_w_cell / map0.totals.available : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<RangeRow> range_sweep(std::span<const Mechanism> mechanisms,
                                  std::span<const double> ranges_m, int n_requests, int n_seeds,
                                  std::uint64_t seed_base, const TopologyParams& base,
                                  const SamConfig& base_cfg) {
  std::vector<RangeRow> rows;
  for (double range : ranges_m) {
    for (int s = 0; s < n_seeds; ++s) {
      TopologyParams params = base;
      params.n_secondary = n_requests;
      params.su_range_m = range;
      params.seed = seed_base + static_cast<std::uint64_t>(s);
      const Scenario sc = generate_topology(params);
      const HexGrid grid = sc.grid.build();
      for (Mechanism mech : mechanisms) {
        SamConfig cfg = base_cfg;
        cfg.mechanism = mech;
        cfg.knows_pu_receivers =
            mech == Mechanism::stppov || mech == Mechanism::nsccx || cfg.knows_pu_receivers;
        rows.push_back({mech, range, params.seed, evaluate(cfg, sc, grid).metrics});
      }
    }
  }
  return rows;
}

namespace {

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  return out;
}

void write_metrics(std::ofstream& out, const SamMetrics& m) {
  out << m.n_scheduled << ',' << m.n_rejected << ',' << m.n_harmed_receivers << ','
      << m.n_harmed_pu_receivers << ',' << format_double(m.pct_exploited) << ','
      << format_double(m.pct_available) << ',' << format_double(m.lost_available) << ','
      << format_double(m.potentially_degraded) << ',' << format_double(m.unexploited) << ','
      << format_double(m.degraded) << ',' << format_double(m.pre_available) << ','
      << format_double(m.post_available) << '\n';
}

constexpr const char* kMetricsHeader =
    "n_scheduled,n_rejected,n_harmed_receivers,n_harmed_pu_receivers,pct_exploited,"
    "pct_available,lost_available_w_cell,potentially_degraded_w_cell,unexploited_w_cell,"
    "degraded_w_cell,pre_available_w_cell,post_available_w_cell";

}  // namespace

void export_compare_csv(std::span<const CompareRow> rows, const std::string& path) {
  auto out = open_csv(path);
  out << "mechanism,n_secondary,seed," << kMetricsHeader << "\n";
  for (const auto& r : rows) {
    out << mechanism_name(r.mechanism) << ',' << r.n_secondary << ',' << r.seed << ',';
    write_metrics(out, r.metrics);
  }
}

void export_recovery_csv(std::span<const RecoveryRow> rows, const std::string& path) {
  auto out = open_csv(path);
  out << "sensitivity_dbm,max_su_power_dbm,recovered_w_cell,available_w_cell,recovered_pct\n";
  for (const auto& r : rows) {
    out << format_double(r.sensitivity_dbm) << ',' << format_double(r.max_su_power_dbm) << ','
        << format_double(r.recovered_w_cell) << ',' << format_double(r.available_w_cell) << ','
        << format_double(r.recovered_pct) << '\n';
  }
}

void export_range_csv(std::span<const RangeRow> rows, const std::string& path) {
  auto out = open_csv(path);
  out << "mechanism,range_m,seed," << kMetricsHeader << "\n";
  for (const auto& r : rows) {
    out << mechanism_name(r.mechanism) << ',' << format_double(r.range_m) << ',' << r.seed << ',';
    write_metrics(out, r.metrics);
  }
}

}  // namespace squant
