// Command-line driver: quantifies scenarios, runs the mechanism comparison /
// recovery / discretization / estimation / enforcement experiments and writes
// CSV artifacts plus a reproducibility manifest per run.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "squant/errors.hpp"
#include "squant/estimation.hpp"
#include "squant/manifest.hpp"
#include "squant/map_io.hpp"
#include "squant/policy.hpp"
#include "squant/presets.hpp"
#include "squant/render.hpp"
#include "squant/scenario_io.hpp"
#include "squant/sweeps.hpp"
#include "squant/units.hpp"

namespace fs = std::filesystem;
using namespace squant;

namespace {

struct SweepOverrides {
  std::map<std::string, std::vector<double>> lists;

  void parse(const std::vector<std::string>& specs) {
    for (const std::string& s : specs) {
      const auto eq = s.find('=');
      if (eq == std::string::npos)
        throw ValidationError("", "--sweep expects <name>=<comma list>, got '" + s + "'");
      const std::string name = s.substr(0, eq);
      std::vector<double> values;
      std::stringstream ss(s.substr(eq + 1));
      std::string item;
      while (std::getline(ss, item, ',')) values.push_back(parse_double(item));
      if (values.empty()) throw ValidationError("", "--sweep list for '" + name + "' is empty");
      lists[name] = std::move(values);
    }
  }

  std::vector<double> take(const std::string& name, std::vector<double> fallback) {
    auto it = lists.find(name);
    if (it == lists.end()) return fallback;
    auto v = it->second;
    lists.erase(it);
    return v;
  }

  void ensure_consumed() const {
    if (!lists.empty())
      throw ValidationError("", "unknown sweep parameter '" + lists.begin()->first + "'");
  }
};

std::string sweep_to_string(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s;
}

fs::path prepare_out(const std::string& out) {
  fs::path dir(out);
  fs::create_directories(dir);
  return dir;
}

std::vector<Mechanism> mechanisms_from_flag(const std::string& flag) {
  if (flag.empty())
    return {Mechanism::underlay, Mechanism::overlay, Mechanism::stov, Mechanism::stppov,
            Mechanism::nsccx};
  const auto m = mechanism_from_name(flag);
  if (!m) throw ValidationError("", "unknown mechanism '" + flag + "'");
  return {*m};
}

int run_quantify(const std::string& scenario_path, double side_m, const std::string& out,
                 bool render) {
  Scenario sc = scenario_path.empty() ? presets::single_transmitter() : load_scenario(scenario_path);
  HexGrid grid = sc.grid.build();
  if (side_m > 0.0) grid = HexGrid::covering(side_m, grid.extent().x, grid.extent().y, grid.origin());
  const ConsumptionMap map = aggregate(sc, grid);

  const fs::path dir = prepare_out(out);
  export_map(map, (dir / "map.csv").string());
  export_totals(map, (dir / "totals.csv").string());
  if (render) {
    render_svg(map, MapField::occupancy, (dir / "occupancy.svg").string());
    render_svg(map, MapField::opportunity, (dir / "opportunity.svg").string());
    render_svg(map, MapField::liability, (dir / "liability.svg").string());
  }
  RunManifest mf{"quantify", scenario_path, 0, out, {}};
  if (side_m > 0.0) mf.overrides["side_m"] = format_double(side_m);
  mf.write((dir / "manifest.json").string());
  std::printf("total %s utilized %s forbidden %s available %s (W*cell)\n",
              format_double(map.totals.total).c_str(), format_double(map.totals.utilized).c_str(),
              format_double(map.totals.forbidden).c_str(),
              format_double(map.totals.available).c_str());
  return 0;
}

int run_compare(const std::string& mech_flag, SweepOverrides& sweeps, int seeds,
                std::uint64_t seed, const std::string& out) {
  const auto mechs = mechanisms_from_flag(mech_flag);
  const auto n_list_d = sweeps.take("n_secondary", {8, 16, 24, 32});
  sweeps.ensure_consumed();
  std::vector<int> n_list;
  for (double d : n_list_d) n_list.push_back(static_cast<int>(d));

  const auto base = presets::mechanism_comparison_topology(16, seed);
  const auto rows = compare_sams(mechs, n_list, seeds, seed, base, presets::comparison_config());

  const fs::path dir = prepare_out(out);
  export_compare_csv(rows, (dir / "compare_sams.csv").string());
  RunManifest mf{"compare-sams", "", seed, out, {}};
  mf.overrides["n_secondary"] = sweep_to_string(n_list_d);
  mf.overrides["seeds"] = std::to_string(seeds);
  if (!mech_flag.empty()) mf.overrides["mechanism"] = mech_flag;
  mf.write((dir / "manifest.json").string());
  std::printf("wrote %zu rows\n", rows.size());
  return 0;
}

int run_recovery(SweepOverrides& sweeps, std::uint64_t seed, const std::string& out) {
  const auto sens = sweeps.take("sensitivity_dbm", {-120.0, -100.0, -80.0});
  const auto caps = sweeps.take("cap_dbm", {10.0, 15.0, 20.0, 25.0, 30.0});
  sweeps.ensure_consumed();

  const Scenario sc = generate_topology(presets::recovery_topology(seed));
  const auto rows = recovery_sweep(sc, sc.grid.build(), sens, caps);

  const fs::path dir = prepare_out(out);
  export_recovery_csv(rows, (dir / "recovery.csv").string());
  RunManifest mf{"recovery", "", seed, out, {}};
  mf.overrides["sensitivity_dbm"] = sweep_to_string(sens);
  mf.overrides["cap_dbm"] = sweep_to_string(caps);
  mf.write((dir / "manifest.json").string());
  std::printf("wrote %zu rows\n", rows.size());
  return 0;
}

int run_ranges(const std::string& mech_flag, SweepOverrides& sweeps, int seeds, int n_requests,
               std::uint64_t seed, const std::string& out) {
  auto mechs = mechanisms_from_flag(mech_flag);
  const auto ranges = sweeps.take("range_m", {50.0, 100.0, 200.0, 400.0});
  sweeps.ensure_consumed();

  const auto base = presets::active_incumbent_topology(n_requests, seed);
  const auto rows =
      range_sweep(mechs, ranges, n_requests, seeds, seed, base, presets::comparison_config());

  const fs::path dir = prepare_out(out);
  export_range_csv(rows, (dir / "range_sweep.csv").string());
  RunManifest mf{"range-sweep", "", seed, out, {}};
  mf.overrides["range_m"] = sweep_to_string(ranges);
  mf.overrides["seeds"] = std::to_string(seeds);
  mf.overrides["n_requests"] = std::to_string(n_requests);
  if (!mech_flag.empty()) mf.overrides["mechanism"] = mech_flag;
  mf.write((dir / "manifest.json").string());
  std::printf("wrote %zu rows\n", rows.size());
  return 0;
}

int run_discretization(const std::string& scenario_path, SweepOverrides& sweeps,
                       const std::string& out) {
  const auto sides = sweeps.take("side_m", {1.0, 2.0, 5.0, 10.0, 25.0, 50.0, 100.0});
  sweeps.ensure_consumed();
  const Scenario sc =
      scenario_path.empty() ? presets::discretization_probe() : load_scenario(scenario_path);
  const auto rows = discretization_sweep(sc, sides);

  const fs::path dir = prepare_out(out);
  std::ofstream csv(dir / "discretization.csv", std::ios::binary);
  if (!csv) throw IoError((dir / "discretization.csv").string(), "cannot open for writing");
  csv << "side_m,cells,total_w_cell,utilized_w_cell,forbidden_w_cell,available_w_cell,"
         "utilized_frac,forbidden_frac,available_frac\n";
  for (const auto& r : rows) {
    csv << format_double(r.side_m) << ',' << r.cells << ',' << format_double(r.totals.total) << ','
        << format_double(r.totals.utilized) << ',' << format_double(r.totals.forbidden) << ','
        << format_double(r.totals.available) << ',' << format_double(r.utilized_frac) << ','
        << format_double(r.forbidden_frac) << ',' << format_double(r.available_frac) << '\n';
  }
  RunManifest mf{"discretization", scenario_path, 0, out, {}};
  mf.overrides["side_m"] = sweep_to_string(sides);
  mf.write((dir / "manifest.json").string());
  std::printf("wrote %zu rows\n", rows.size());
  return 0;
}

int run_estimate(double sigma_db, int per_section, std::uint64_t seed, const std::string& out,
                 bool render) {
  const Scenario sc = presets::estimation_scene();
  const HexGrid grid = sc.grid.build();
  const ConsumptionMap truth = aggregate(sc, grid);
  const auto sensors = SensorGrid::regular({0, 0}, 2000.0, 2000.0, 4, 4, per_section);
  const auto meas = simulate_measurements(sc, sensors, sigma_db, seed);
  const auto txs = transmitters_of(sc);
  const auto prop = estimate_propagation(meas, sensors, txs);

  EstimationInputs in;
  for (const auto* t : txs) in.known_txs.push_back(*t);
  for (const auto& n : sc.networks)
    for (const auto& rx : n.receivers) in.declared_rxs.push_back(rx);
  in.bounds = sc.bounds;
  in.bound_form = sc.bound_form;
  const EstimatedMaps est = estimate_maps(meas, sensors, prop, in, grid);
  const MapErrorStats err = map_error(est.map, truth);

  const fs::path dir = prepare_out(out);
  export_map(truth, (dir / "truth_map.csv").string());
  export_map(est.map, (dir / "estimated_map.csv").string(), est.confidence);
  std::ofstream csv(dir / "summary.csv", std::ios::binary);
  if (!csv) throw IoError((dir / "summary.csv").string(), "cannot open for writing");
  csv << "sigma_db,sensors_per_section,seed,mean_abs_occupancy_db,max_abs_occupancy_db,"
         "avail_tt,avail_tf,avail_ft,avail_ff\n";
  csv << format_double(sigma_db) << ',' << per_section << ',' << seed << ','
      << format_double(err.mean_abs_occupancy_db) << ',' << format_double(err.max_abs_occupancy_db)
      << ',' << err.availability_confusion[1][1] << ',' << err.availability_confusion[1][0] << ','
      << err.availability_confusion[0][1] << ',' << err.availability_confusion[0][0] << '\n';
  if (render) {
    render_svg(est.map, MapField::occupancy, (dir / "estimated_occupancy.svg").string());
    render_svg(truth, MapField::occupancy, (dir / "truth_occupancy.svg").string());
  }
  RunManifest mf{"estimate", "", seed, out, {}};
  mf.overrides["sigma_db"] = format_double(sigma_db);
  mf.overrides["sensors_per_section"] = std::to_string(per_section);
  mf.write((dir / "manifest.json").string());
  std::printf("mean |occupancy error| = %s dB over %zu cells\n",
              format_double(err.mean_abs_occupancy_db).c_str(), truth.cells.size());
  return 0;
}

int run_enforce(double violation_db, double tolerance_db, double sigma_db, std::uint64_t seed,
                const std::string& out) {
  const Scenario sc = presets::estimation_scene();
  const HexGrid grid = sc.grid.build();
  const auto sensors = SensorGrid::regular({0, 0}, 2000.0, 2000.0, 4, 4, 16);
  const auto txs = transmitters_of(sc);

  // The first network transmits above its allocation; the rest conform.
  Scenario actual = sc;
  actual.networks.front().transmitter.tx_power_w *= db_to_linear(violation_db);
  const auto meas = simulate_measurements(actual, sensors, sigma_db, seed);

  const fs::path dir = prepare_out(out);
  std::ofstream csv(dir / "verdicts.csv", std::ios::binary);
  if (!csv) throw IoError((dir / "verdicts.csv").string(), "cannot open for writing");
  csv << "record_id,network,allocated_dbm,estimated_dbm,excess_db,n_sensors,verdict\n";

  std::uint64_t rid = 1;
  for (const Network* n : sc.secondaries()) {
    PolicyRecord rec;
    rec.id = rid++;
    rec.footprint.network_id = n->id;
    rec.footprint.allocated_power_w = n->transmitter.tx_power_w;
    rec.footprint.transmitter = n->transmitter;
    rec.footprint.receivers = n->receivers;
    rec.log.push_back({PolicyEvent::Kind::granted, 0.0, "footprint granted"});

    // Audit independence: the audited transmitter's declared power may be
    // wrong, so the propagation fit excludes its measurements.
    std::size_t tx_index = 0;
    for (std::size_t t = 0; t < txs.size(); ++t)
      if (txs[t]->id == n->transmitter.id) tx_index = t;
    const std::vector<std::size_t> excl{tx_index};
    const auto prop = estimate_propagation(meas, sensors, txs, excl);

    EstimatedMaps est{{grid, SpectrumFrame{}, {}, {}}, {}, {}};
    est.tx_powers[n->transmitter.id] = estimate_tx_power(tx_index, meas, sensors, txs, prop);
    const ConformanceReport rep = check_conformance(rec, est, tolerance_db);

    csv << rec.id << ',' << n->id << ','
        << format_double(watt_to_dbm(rec.footprint.allocated_power_w)) << ','
        << (rep.n_sensors ? format_double(watt_to_dbm(rep.estimated_w)) : std::string("nan")) << ','
        << format_double(rep.excess_db) << ',' << rep.n_sensors << ',' << verdict_name(rep.verdict)
        << '\n';
  }

  RunManifest mf{"enforce", "", seed, out, {}};
  mf.overrides["violation_db"] = format_double(violation_db);
  mf.overrides["tolerance_db"] = format_double(tolerance_db);
  mf.overrides["sigma_db"] = format_double(sigma_db);
  mf.write((dir / "manifest.json").string());
  std::printf("verdicts written to %s\n", (dir / "verdicts.csv").string().c_str());
  return 0;
}

int run_write_scenario(const std::string& preset, const std::string& out) {
  Scenario sc;
  if (preset == "single-tx")
    sc = presets::single_transmitter();
  else if (preset == "tx-rx")
    sc = presets::transmitter_and_receiver();
  else if (preset == "discretization")
    sc = presets::discretization_probe();
  else if (preset == "estimation")
    sc = presets::estimation_scene();
  else
    throw ValidationError("", "unknown preset '" + preset + "'");
  save_scenario(sc, out);
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discretized spectrum-consumption quantification and access analysis"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir = "out", mech_flag, preset;
  std::vector<std::string> sweep_specs;
  double side_m = 0.0, sigma_db = 6.0, violation_db = 10.0, tolerance_db = 3.0;
  int seeds = 20, n_requests = 112, per_section = 4;
  std::uint64_t seed = 1;
  bool render = false;

  auto add_common = [&](CLI::App* cmd, bool with_scenario) {
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed, "base seed");
    cmd->add_option("--sweep", sweep_specs, "<name>=<comma list> parameter sweep")->take_all();
    if (with_scenario) cmd->add_option("--scenario", scenario_path, "scenario JSON file");
  };

  auto* quantify = app.add_subcommand("quantify", "quantify a scenario's spectrum spaces");
  add_common(quantify, true);
  quantify->add_option("--side-m", side_m, "override the cell side");
  quantify->add_flag("--render", render, "write SVG heatmaps");

  auto* compare = app.add_subcommand("compare-sams", "compare spectrum-access mechanisms");
  add_common(compare, false);
  compare->add_option("--mechanism", mech_flag, "restrict to one mechanism");
  compare->add_option("--seeds", seeds, "seeds per configuration");

  auto* recovery = app.add_subcommand("recovery", "opportunistic-access recovery sweep");
  add_common(recovery, false);

  auto* ranges = app.add_subcommand("range-sweep", "admissions versus secondary service range");
  add_common(ranges, false);
  ranges->add_option("--mechanism", mech_flag, "restrict to one mechanism");
  ranges->add_option("--seeds", seeds, "seeds per configuration");
  ranges->add_option("--n-requests", n_requests, "spectrum-access requests per run");

  auto* discretization = app.add_subcommand("discretization", "cell-size sensitivity sweep");
  add_common(discretization, true);

  auto* estimate = app.add_subcommand("estimate", "sensor-based map estimation");
  add_common(estimate, false);
  estimate->add_option("--sigma-db", sigma_db, "shadowing sigma");
  estimate->add_option("--sensors-per-section", per_section, "sensor density");
  estimate->add_flag("--render", render, "write SVG heatmaps");

  auto* enforce = app.add_subcommand("enforce", "conformance check from estimated powers");
  add_common(enforce, false);
  enforce->add_option("--violation-db", violation_db, "injected excess of the first network");
  enforce->add_option("--tolerance-db", tolerance_db, "allowed excess before a violation");
  enforce->add_option("--sigma-db", sigma_db, "shadowing sigma");

  auto* write_scn = app.add_subcommand("write-scenario", "write a built-in scenario to JSON");
  write_scn->add_option("--preset", preset, "single-tx | tx-rx | discretization | estimation")
      ->required();
  write_scn->add_option("--out", out_dir, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    SweepOverrides sweeps;
    sweeps.parse(sweep_specs);
    if (quantify->parsed()) return run_quantify(scenario_path, side_m, out_dir, render);
    if (compare->parsed()) return run_compare(mech_flag, sweeps, seeds, seed, out_dir);
    if (recovery->parsed()) return run_recovery(sweeps, seed, out_dir);
    if (ranges->parsed()) return run_ranges(mech_flag, sweeps, seeds, n_requests, seed, out_dir);
    if (discretization->parsed()) return run_discretization(scenario_path, sweeps, out_dir);
    if (estimate->parsed()) return run_estimate(sigma_db, per_section, seed, out_dir, render);
    if (enforce->parsed()) return run_enforce(violation_db, tolerance_db, sigma_db, seed, out_dir);
    if (write_scn->parsed()) return run_write_scenario(preset, out_dir);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
