// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "squant/estimation.hpp"
#include "squant/presets.hpp"
#include "squant/sweeps.hpp"
#include "squant/threading.hpp"
#include "squant/units.hpp"

using namespace squant;

namespace {

int failures = 0;

class Criterion {
public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {
    start_ = std::chrono::steady_clock::now();
  }

  void expect(bool ok, const std::string& detail) {
    if (!ok) bad_.push_back(detail);
    notes_.push_back((ok ? "" : "FAILED: ") + detail);
  }

  void finish(double budget_s) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed >= budget_s) {
      bad_.push_back("runtime exceeded");
      notes_.push_back("FAILED: runtime " + std::to_string(elapsed) + " s exceeds " +
                       std::to_string(budget_s) + " s");
    }
    const bool ok = bad_.empty();
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number_, title_.c_str(),
                elapsed);
    for (const auto& n : notes_) std::printf("        %s\n", n.c_str());
  }

private:
  int number_;
  std::string title_;
  std::vector<std::string> bad_;
  std::vector<std::string> notes_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Conservation identity on 500 random scenarios.
void criterion_conservation() {
  Criterion c(1, "conservation identity on 500 random scenarios");
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    TopologyParams p;
    p.extent_w_m = 1200.0 + 250.0 * static_cast<double>(seed % 7);
    p.extent_h_m = 1100.0 + 200.0 * static_cast<double>(seed % 5);
    p.n_secondary = static_cast<int>(1 + seed % 9);
    p.n_su_receivers = static_cast<int>(seed % 3);
    p.su_range_m = 60.0 + 20.0 * static_cast<double>(seed % 4);
    p.grid_side_m = 100.0 + 50.0 * static_cast<double>(seed % 3);
    p.seed = seed;
    if (seed % 2 == 0) {
      PuParams pu;
      pu.range_m = 400.0;
      pu.rx_distance_m = 200.0;
      pu.n_receivers = static_cast<int>(1 + seed % 6);
      if (seed % 4 == 0) pu.experienced_sinr_db.reset();
      p.pu = pu;
    }
    const Scenario sc = generate_topology(p);
    const ConsumptionMap m = aggregate(sc);
    const double rel = std::abs(m.totals.utilized + m.totals.forbidden + m.totals.available -
                                m.totals.total) /
                       m.totals.total;
    worst = std::max(worst, rel);
  }
  c.expect(worst < 1e-9, "worst relative closure error " + fmt(worst) + " < 1e-9");
  c.finish(60.0);
}

// ---------------------------------------------------------------------------
// 2. Total spectrum space of the default region.
void criterion_total_space() {
  Criterion c(2, "default 676-cell region holds 676 W*cell");
  const Scenario sc = presets::single_transmitter();
  const HexGrid g = sc.grid.build();
  const double total = total_space(g, sc.frame, sc.bounds);
  c.expect(g.cell_count() == 676, "676 unit regions");
  c.expect(total == 676.0, "total spectrum space exactly 676 W*cell");
  c.finish(5.0);
}

// ---------------------------------------------------------------------------
// 3. Spectrum consumed by a lone 15 dBm transmitter.
void criterion_single_transmitter() {
  Criterion c(3, "single-transmitter utilized spectrum near 1.8e-8 W*cell");
  const ConsumptionMap m = aggregate(presets::single_transmitter());
  const double ratio = m.totals.utilized / 1.8e-8;
  c.expect(ratio > 1.0 / 3.0 && ratio < 3.0,
           "utilized " + fmt(m.totals.utilized) + " within a factor 3 of 1.8e-8 (ratio " +
               fmt(ratio) + ")");
  c.finish(1.0);
}

// ---------------------------------------------------------------------------
// 4. Forbidden / available split with one receiver.
void criterion_receiver_split() {
  Criterion c(4, "receiver forbids 16.6% and leaves 83.4% available");
  const Scenario sc = presets::transmitter_and_receiver();
  const ConsumptionMap m = aggregate(sc);
  const double fb_pct = 100.0 * m.totals.forbidden / m.totals.total;
  const double av_pct = 100.0 * m.totals.available / m.totals.total;
  c.expect(std::abs(fb_pct - 16.6) <= 3.0,
           "forbidden " + fmt(fb_pct) + "% within 16.6% +/- 3 points");
  c.expect(std::abs(av_pct - 83.4) <= 3.0,
           "available " + fmt(av_pct) + "% within 83.4% -/+ 3 points");

  // Analytic sanity oracle: the unclipped liability disc of the receiver.
  const auto im =
      interference_margin(sc.networks[0].receivers[0], sc.networks[0].transmitter, sc.prop);
  const double radius = std::pow(sc.bounds.p_max_w / im.watts, 1.0 / sc.prop.alpha);
  const double disc_cells = 2.0 * std::numbers::pi * radius * radius *
                            (0.5 - 1.0 / (sc.prop.alpha + 2.0)) / sc.grid.build().cell_area();
  const double disc_pct = 100.0 * disc_cells / m.totals.total;
  c.expect(disc_pct > 16.6 && disc_pct < 22.0,
           "disc-integral sanity oracle " + fmt(disc_pct) + "% (~19% before edge clipping)");
  c.expect(std::abs(fb_pct - disc_pct) < 3.0,
           "measured split within 3 points of the disc estimate (edge clipping and centroid "
           "sampling pull in opposite directions)");
  c.finish(1.0);
}

// ---------------------------------------------------------------------------
// 5. Sensing ranges implied by detection sensitivities.
void criterion_sensing_radius() {
  Criterion c(5, "sensing ranges of 63 km and 1390 m");
  const double r1 = sensing_radius(dbm_to_watt(30.0), dbm_to_watt(-90.0), 2.5);
  const double r2 = sensing_radius(dbm_to_watt(30.0), dbm_to_watt(-80.0), 3.5);
  c.expect(std::abs(r1 - 63096.0) / 63096.0 < 1e-3, "radius " + fmt(r1) + " m ~ 63096 m (0.1%)");
  c.expect(std::abs(r2 - 1390.0) / 1390.0 < 5e-3, "radius " + fmt(r2) + " m ~ 1390 m (0.5%)");
  c.finish(1.0);
}

// ---------------------------------------------------------------------------
// 6. Opportunistic recovery with 112 transceivers.
void criterion_recovery() {
  Criterion c(6, "recovery near zero at a 10 dBm cap and increasing toward 30 dBm");
  const Scenario sc = generate_topology(presets::recovery_topology(1));
  const double sens[] = {-120.0};
  const double caps[] = {10.0, 15.0, 20.0, 25.0, 30.0};
  const auto rows = recovery_sweep(sc, sc.grid.build(), sens, caps);
  c.expect(rows[0].recovered_pct < 1.0,
           "recovered " + fmt(rows[0].recovered_pct) + "% < 1% at a 10 dBm cap");
  bool increasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    increasing = increasing && rows[i].recovered_w_cell > rows[i - 1].recovered_w_cell;
  c.expect(increasing, "recovery strictly increases with the cap from 10 to 30 dBm (" +
                           fmt(rows[0].recovered_pct) + "% -> " +
                           fmt(rows.back().recovered_pct) + "%)");
  c.finish(30.0);
}

// ---------------------------------------------------------------------------
// 7. Mechanism-comparison orderings, incumbent active.
void criterion_mechanism_orderings() {
  Criterion c(7, "mechanism comparison orderings over 20 seeds");
  const Mechanism mechs[] = {Mechanism::underlay, Mechanism::overlay, Mechanism::stov,
                             Mechanism::stppov};
  const int n_list[] = {8, 16, 24, 32};
  const auto base = presets::mechanism_comparison_topology(16, 1);
  const auto cfg = presets::comparison_config();
  const auto rows = compare_sams(mechs, n_list, 20, 1, base, cfg);

  bool underlay_all = true;
  bool overlay_outside = true;
  long harmed_pu_stov = 0, harmed_pu_stppov = 0;
  double avail_stov = 0.0, avail_underlay = 0.0;
  int runs = 0;
  const double radius = sensing_radius(1.0, dbm_to_watt(cfg.su_sensitivity_dbm), 3.5);

  for (const auto& r : rows) {
    if (r.mechanism == Mechanism::underlay) {
      underlay_all = underlay_all && r.metrics.n_scheduled == r.n_secondary;
      avail_underlay += r.metrics.post_available;
      ++runs;
    }
    if (r.mechanism == Mechanism::stov) {
      avail_stov += r.metrics.post_available;
      harmed_pu_stov += r.metrics.n_harmed_pu_receivers;
    }
    if (r.mechanism == Mechanism::stppov) harmed_pu_stppov += r.metrics.n_harmed_pu_receivers;
  }

  // (b) re-run overlay schedules and check admitted positions directly.
  for (int n : n_list) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      TopologyParams p = presets::mechanism_comparison_topology(n, seed);
      const Scenario sc = generate_topology(p);
      SamConfig oc = cfg;
      oc.mechanism = Mechanism::overlay;
      std::vector<AccessRequest> reqs;
      for (const Network* s : sc.secondaries()) reqs.push_back({s->id, 0, 0});
      const ScheduleResult res = schedule(reqs, oc, sc, sc.grid.build());
      const Point pu = sc.primaries()[0]->transmitter.location;
      for (const auto& a : res.admitted) {
        const Network* net = sc.find_network(a.network_id);
        overlay_outside =
            overlay_outside && distance(net->transmitter.location, pu) > radius - 1e-9;
      }
    }
  }

  c.expect(underlay_all, "(a) underlay admits every request in all " + std::to_string(runs) +
                             " runs");
  c.expect(overlay_outside, "(b) overlay admits nobody within " + fmt(radius) + " m of the primary");
  c.expect(avail_stov > avail_underlay,
           "(c) mean available: stov " + fmt(avail_stov / runs) + " > underlay " +
               fmt(avail_underlay / runs) + " W*cell");
  c.expect(harmed_pu_stppov < harmed_pu_stov,
           "(d) harmed primary receivers: stppov " + std::to_string(harmed_pu_stppov) +
               " < stov " + std::to_string(harmed_pu_stov));
  c.finish(120.0);
}

// ---------------------------------------------------------------------------
// 8. Coexistence scheduler against the guarded baseline.
namespace c8 {

Scenario small_instance(std::uint64_t seed) {
  TopologyParams p;
  p.extent_w_m = 1500.0;
  p.extent_h_m = 1500.0;
  p.n_secondary = 6;
  p.su_range_m = 150.0;
  p.seed = seed;
  PuParams pu;
  pu.tx_power_dbm = 30.0;
  pu.range_m = 500.0;
  pu.rx_distance_m = 250.0;
  pu.n_receivers = 4;
  pu.experienced_sinr_db.reset();
  p.pu = pu;
  return generate_topology(p);
}

// Independent feasibility check of an admitted set: primary budgets and
// secondary link SINRs recomputed from scratch.
bool sound(const Scenario& sc, const SamConfig& cfg, const ScheduleResult& res, int n_potential) {
  const double guard = cfg.guard_db(n_potential);
  for (const Network* p : sc.primaries()) {
    for (const auto& rx : p->receivers) {
      const double dl = std::max(1.0, distance(p->transmitter.location, rx.location));
      const double s = rx.experienced_sinr ? *rx.experienced_sinr * rx.noise_w
                                           : p->transmitter.tx_power_w * std::pow(dl, -sc.prop.alpha);
      const double margin = std::max(0.0, s / rx.beta_min - rx.noise_w);
      double i = 0.0;
      for (const auto& a : res.admitted) {
        const Network* n = sc.find_network(a.network_id);
        const double d = distance(n->transmitter.location, rx.location);
        i += a.power_w * (d <= 1.0 ? 1.0 : std::pow(d, -sc.prop.alpha));
      }
      if (i > margin * db_to_linear(-guard) * (1 + 1e-9)) return false;
    }
  }
  for (const auto& a : res.admitted) {
    const Network* n = sc.find_network(a.network_id);
    for (const auto& rx : n->receivers) {
      const double dl = distance(n->transmitter.location, rx.location);
      const double s = a.power_w * (dl <= 1.0 ? 1.0 : std::pow(dl, -sc.prop.alpha));
      double i = 0.0;
      for (const auto& b : res.admitted) {
        if (b.network_id == a.network_id) continue;
        const Network* m = sc.find_network(b.network_id);
        const double d = distance(m->transmitter.location, rx.location);
        i += b.power_w * (d <= 1.0 ? 1.0 : std::pow(d, -sc.prop.alpha));
      }
      for (const Network* p : sc.primaries()) {
        const double d = distance(p->transmitter.location, rx.location);
        i += p->transmitter.tx_power_w * (d <= 1.0 ? 1.0 : std::pow(d, -sc.prop.alpha));
      }
      if (s / (rx.noise_w + i) < rx.beta_min * (1 - 1e-6)) return false;
    }
  }
  return true;
}

}  // namespace c8

void criterion_coexistence_scheduler() {
  Criterion c(8, "coexistence scheduler beats the guarded baseline at the largest range");
  const Mechanism mechs[] = {Mechanism::stppov, Mechanism::nsccx};
  const double ranges[] = {400.0};
  const auto base = presets::active_incumbent_topology(112, 1);
  const auto rows = range_sweep(mechs, ranges, 112, 20, 1, base, presets::comparison_config());
  double nsccx_mean = 0.0, stppov_mean = 0.0;
  for (const auto& r : rows) {
    if (r.mechanism == Mechanism::nsccx) nsccx_mean += r.metrics.n_scheduled / 20.0;
    if (r.mechanism == Mechanism::stppov) stppov_mean += r.metrics.n_scheduled / 20.0;
  }
  c.expect(nsccx_mean >= stppov_mean, "mean admitted at 400 m range: nsccx " + fmt(nsccx_mean) +
                                          " >= stppov " + fmt(stppov_mean));

  // Exhaustive subset verification on six-request instances.
  SamConfig cfg = presets::comparison_config();
  cfg.mechanism = Mechanism::nsccx;
  cfg.knows_pu_receivers = true;
  bool all_found = true, all_sound = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Scenario sc = c8::small_instance(seed);
    const HexGrid grid = sc.grid.build();
    const auto secs = sc.secondaries();
    std::vector<AccessRequest> reqs;
    for (const Network* n : secs) reqs.push_back({n->id, 0, 0});
    const ScheduleResult res = schedule(reqs, cfg, sc, grid);
    all_sound = all_sound && c8::sound(sc, cfg, res, 6);

    std::set<std::string> admitted;
    for (const auto& a : res.admitted) admitted.insert(a.network_id);
    std::set<std::set<std::string>> feasible;
    for (unsigned mask = 0; mask < 64; ++mask) {
      std::vector<AccessRequest> sub;
      std::set<std::string> ids;
      for (int b = 0; b < 6; ++b)
        if (mask & (1u << b)) {
          sub.push_back({secs[b]->id, 0, 0});
          ids.insert(secs[b]->id);
        }
      const ScheduleResult replay = schedule_nsccx(sub, cfg, sc, grid);
      if (replay.admitted.size() == sub.size() && c8::sound(sc, cfg, replay, 6))
        feasible.insert(ids);
    }
    all_found = all_found && feasible.count(admitted) == 1;
  }
  c.expect(all_sound, "admitted sets pass the independent feasibility recomputation");
  c.expect(all_found, "admitted sets appear among the exhaustively verified feasible subsets");
  c.finish(120.0);
}

// ---------------------------------------------------------------------------
// 9. Discretization error against a brute-force sampling oracle.
namespace c9 {

struct Fractions {
  double ut = 0.0, fb = 0.0, av = 0.0;
};

// Uniform-lattice sampling of the probe scene with its own point math.
Fractions brute_force(const Scenario& sc, double step, Point lo, Point hi) {
  const Network& n = sc.networks[0];
  const Point tx = n.transmitter.location;
  const double p_tx = n.transmitter.tx_power_w;
  const Point rxp = n.receivers[0].location;
  const double alpha = sc.prop.alpha;

  const double dl = std::hypot(tx.x - rxp.x, tx.y - rxp.y);
  const double s = p_tx * (dl <= 1.0 ? 1.0 : std::pow(dl, -alpha));
  const double margin = std::max(0.0, s / n.receivers[0].beta_min - n.receivers[0].noise_w);
  const double p_max = sc.bounds.p_max_w;
  const double floor = -(p_max - sc.bounds.p_min_w);

  const std::int64_t nx = static_cast<std::int64_t>((hi.x - lo.x) / step);
  const std::int64_t ny = static_cast<std::int64_t>((hi.y - lo.y) / step);
  std::vector<double> ut_rows(nx, 0.0), fb_rows(nx, 0.0), av_rows(nx, 0.0);
  parallel_for(nx, [&](std::int64_t i) {
    const double x = lo.x + (i + 0.5) * step;
    double ut = 0, fb = 0, av = 0;
    for (std::int64_t j = 0; j < ny; ++j) {
      const double y = lo.y + (j + 0.5) * step;
      const double dt = std::hypot(x - tx.x, y - tx.y);
      const double om = p_tx * (dt <= 1.0 ? 1.0 : std::pow(dt, -alpha));
      const double dr = std::hypot(x - rxp.x, y - rxp.y);
      const double bound = margin * (dr <= 1.0 ? 1.0 : std::pow(dr, alpha));
      const double g = std::max(std::min(p_max - om, bound), floor);
      ut += om;
      av += g;
      fb += p_max - om - g;
    }
    ut_rows[i] = ut;
    fb_rows[i] = fb;
    av_rows[i] = av;
  });
  KahanSum ut, fb, av;
  for (std::int64_t i = 0; i < nx; ++i) {
    ut.add(ut_rows[i]);
    fb.add(fb_rows[i]);
    av.add(av_rows[i]);
  }
  const double count = static_cast<double>(nx) * static_cast<double>(ny) * p_max;
  return {ut.value() / count, fb.value() / count, av.value() / count};
}

}  // namespace c9

void criterion_discretization() {
  Criterion c(9, "fine discretization matches the sampling oracle; coarse overstates availability");
  const Scenario sc = presets::discretization_probe();
  const double sides[] = {100.0, 1.0};
  const auto rows = discretization_sweep(sc, sides);
  const auto& coarse = rows[0];
  const auto& fine = rows[1];

  // Oracle samples the tiling rectangle of the side-1 grid at 0.25 m.
  const HexGrid base = sc.grid.build();
  const HexGrid g1 = HexGrid::covering(1.0, base.extent().x, base.extent().y, base.origin());
  const Point lo{g1.origin().x - g1.col_pitch() / 2.0, g1.origin().y - g1.row_pitch() / 2.0};
  const Point hi{lo.x + g1.extent().x, lo.y + g1.extent().y};
  const c9::Fractions oracle = c9::brute_force(sc, 0.25, lo, hi);

  c.expect(std::abs(fine.utilized_frac - oracle.ut) < 0.01,
           "utilized fraction off by " + fmt(std::abs(fine.utilized_frac - oracle.ut)) +
               " of the total (< 1%)");
  c.expect(std::abs(fine.forbidden_frac - oracle.fb) < 0.01,
           "forbidden fraction off by " + fmt(std::abs(fine.forbidden_frac - oracle.fb)) +
               " of the total (< 1%)");
  c.expect(std::abs(fine.available_frac - oracle.av) < 0.01,
           "available fraction off by " + fmt(std::abs(fine.available_frac - oracle.av)) +
               " of the total (< 1%)");
  c.expect(std::abs(fine.forbidden_frac - oracle.fb) / oracle.fb < 0.01,
           "forbidden within 1% relative of the oracle (" + fmt(fine.forbidden_frac) + " vs " +
               fmt(oracle.fb) + ")");
  c.expect(std::abs(fine.available_frac - oracle.av) / oracle.av < 0.01,
           "available within 1% relative of the oracle");
  c.expect(coarse.available_frac > fine.available_frac,
           "available(side 100) " + fmt(coarse.available_frac) + " > available(side 1) " +
               fmt(fine.available_frac) + " with the receiver at a cell vertex");
  c.finish(60.0);
}

// ---------------------------------------------------------------------------
// 10. Estimation accuracy and policy enforcement.
void criterion_estimation_enforcement() {
  Criterion c(10, "estimation exactness, density trend, and violation detection");
  const Scenario sc = presets::estimation_scene();
  const HexGrid grid = sc.grid.build();
  const ConsumptionMap truth = aggregate(sc, grid);
  const auto txs = transmitters_of(sc);

  EstimationInputs in;
  for (const auto* t : txs) in.known_txs.push_back(*t);
  for (const auto& n : sc.networks)
    for (const auto& rx : n.receivers) in.declared_rxs.push_back(rx);
  in.bounds = sc.bounds;

  // Noiseless pipeline reproduces the truth to 1e-9 relative.
  {
    const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 4);
    const auto meas = simulate_measurements(sc, sensors, 0.0, 1);
    const auto prop = estimate_propagation(meas, sensors, txs);
    const auto est = estimate_maps(meas, sensors, prop, in, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < truth.cells.size(); ++i) {
      worst = std::max(worst, std::abs(est.map.cells[i].occupancy_w - truth.cells[i].occupancy_w) /
                                  std::max(truth.cells[i].occupancy_w, 1e-300));
      worst = std::max(worst,
                       std::abs(est.map.cells[i].opportunity_w - truth.cells[i].opportunity_w) /
                           std::max(std::abs(truth.cells[i].opportunity_w), 1e-300));
    }
    c.expect(worst < 1e-9, "noiseless relative map error " + fmt(worst) + " < 1e-9");
  }

  // Error non-increasing in sensor density, seed-averaged.
  {
    double prev = 1e300;
    bool monotone = true;
    std::string trace;
    for (int k : {1, 4, 16}) {
      const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, k);
      double mean = 0.0;
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto meas = simulate_measurements(sc, sensors, 6.0, 3000 + seed);
        const auto prop = estimate_propagation(meas, sensors, txs);
        const auto est = estimate_maps(meas, sensors, prop, in, grid);
        mean += map_error(est.map, truth).mean_abs_occupancy_db / 50.0;
      }
      monotone = monotone && mean <= prev;
      prev = mean;
      trace += (trace.empty() ? "" : " -> ") + fmt(mean);
    }
    c.expect(monotone, "mean |dB| error non-increasing across 1 -> 4 -> 16 sensors per section (" +
                           trace + ")");
  }

  // Enforcement: no false violations at zero shadowing, and an injected
  // 10 dB excess caught in at least 95 of 100 seeds at 6 dB shadowing.
  {
    const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 16);
    bool no_false = true;
    for (std::size_t audit = 0; audit < txs.size(); ++audit) {
      const auto meas = simulate_measurements(sc, sensors, 0.0, 7);
      const std::vector<std::size_t> excl{audit};
      const auto prop = estimate_propagation(meas, sensors, txs, excl);
      const auto est = estimate_tx_power(audit, meas, sensors, txs, prop);
      const double excess = watt_to_dbm(est.power_w) - watt_to_dbm(txs[audit]->tx_power_w);
      no_false = no_false && !(excess > 0.5);
    }
    c.expect(no_false, "zero false violations at zero shadowing");

    Scenario actual = sc;
    actual.networks[0].transmitter.tx_power_w *= db_to_linear(10.0);
    int detected = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto meas = simulate_measurements(actual, sensors, 6.0, 5000 + seed);
      const std::vector<std::size_t> excl{0};
      const auto prop = estimate_propagation(meas, sensors, txs, excl);
      const auto est = estimate_tx_power(0, meas, sensors, txs, prop);
      if (watt_to_dbm(est.power_w) - watt_to_dbm(txs[0]->tx_power_w) > 3.0) ++detected;
    }
    c.expect(detected >= 95, "injected +10 dB violation detected in " + std::to_string(detected) +
                                 " / 100 seeds (>= 95)");
  }
  c.finish(120.0);
}

}  // namespace

int main() {
  criterion_conservation();
  criterion_total_space();
  criterion_single_transmitter();
  criterion_receiver_split();
  criterion_sensing_radius();
  criterion_recovery();
  criterion_mechanism_orderings();
  criterion_coexistence_scheduler();
  criterion_discretization();
  criterion_estimation_enforcement();

  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
