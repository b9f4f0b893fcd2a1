#include "squant/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "squant/rng.hpp"
#include "squant/units.hpp"

namespace squant {

namespace {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se2 = 0.0;      // squared standard error of the slope
  double intercept_se2 = 0.0;
  bool ok = false;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2) return {};
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 1e-12) return {};
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ssr += r * r;
  }
  // Residual variance; with df = 0 the fit carries no precision information.
  const double s2 = n > 2 ? ssr / static_cast<double>(n - 2) : std::numeric_limits<double>::infinity();
  f.slope_se2 = s2 / sxx;
  f.intercept_se2 = s2 * (1.0 / n + mx * mx / sxx);
  f.ok = true;
  return f;
}

double precision_blend(double local, double local_se2, double global, double global_se2) {
  const double pl = 1.0 / std::max(local_se2, 1e-24);
  const double pg = 1.0 / std::max(global_se2, 1e-24);
  return (pl * local + pg * global) / (pl + pg);
}

}  // namespace

int SensorGrid::section_of(Point p) const {
  int sx = static_cast<int>(std::floor((p.x - origin.x) / section_w_m));
  int sy = static_cast<int>(std::floor((p.y - origin.y) / section_h_m));
  sx = std::clamp(sx, 0, sections_x - 1);
  sy = std::clamp(sy, 0, sections_y - 1);
  return sy * sections_x + sx;
}

SensorGrid SensorGrid::regular(Point origin, double width_m, double height_m, int sections_x,
                               int sections_y, int per_section) {
  if (sections_x < 1 || sections_y < 1) throw ConfigError("sensor grid: need at least one section");
  if (per_section < 1) throw ConfigError("sensor grid: need at least one sensor per section");
  SensorGrid g;
  g.origin = origin;
  g.sections_x = sections_x;
  g.sections_y = sections_y;
  g.section_w_m = width_m / sections_x;
  g.section_h_m = height_m / sections_y;
  const int side = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(per_section)))));
  int id = 0;
  for (int sy = 0; sy < sections_y; ++sy) {
    for (int sx = 0; sx < sections_x; ++sx) {
      int placed = 0;
      for (int j = 0; j < side && placed < per_section; ++j) {
        for (int i = 0; i < side && placed < per_section; ++i, ++placed) {
          Sensor s;
          s.id = id++;
          s.section = sy * sections_x + sx;
          s.location = {origin.x + (sx + (i + 0.5) / side) * g.section_w_m,
                        origin.y + (sy + (j + 0.5) / side) * g.section_h_m};
          g.sensors.push_back(s);
        }
      }
    }
  }
  return g;
}

double PropagationEstimate::gain(int section, double distance_m) const {
  const auto& s = sections.at(static_cast<std::size_t>(section));
  if (distance_m <= 1.0) return 1.0;
  return std::pow(distance_m, -s.alpha_hat);
}

double PropagationEstimate::shadow_factor(int section) const {
  return db_to_linear(sections.at(static_cast<std::size_t>(section)).shadow_db);
}

std::vector<const TransmitterSpec*> transmitters_of(const Scenario& sc) {
  std::vector<const TransmitterSpec*> out;
  for (const auto& n : sc.networks) out.push_back(&n.transmitter);
  return out;
}

std::vector<Measurement> simulate_measurements(const Scenario& sc, const SensorGrid& sensors,
                                               double shadow_sigma_db, std::uint64_t seed) {
  const auto txs = transmitters_of(sc);
  std::vector<Measurement> out;
  out.reserve(sensors.sensors.size());
  for (const auto& s : sensors.sensors) {
    auto rng = rng_stream(seed, static_cast<std::uint64_t>(s.id));
    std::normal_distribution<double> shadow(0.0, 1.0);
    Measurement m;
    m.sensor_id = s.id;
    m.noise_floor_w = sc.ambient_noise_w;
    m.per_tx_w.reserve(txs.size());
    for (const TransmitterSpec* tx : txs) {
      const double truth = received_power(*tx, s.location, sc.prop);
      const double db = shadow_sigma_db * shadow(rng);
      m.per_tx_w.push_back(truth * db_to_linear(db));
    }
    out.push_back(std::move(m));
  }
  return out;
}

PropagationEstimate estimate_propagation(std::span<const Measurement> measurements,
                                         const SensorGrid& sensors,
                                         std::span<const TransmitterSpec* const> known_txs,
                                         std::span<const std::size_t> exclude_txs) {
  const int n_sections = sensors.section_count();
  std::vector<std::vector<double>> xs(n_sections), ys(n_sections);
  std::vector<double> all_x, all_y;
  std::vector<char> excluded(known_txs.size(), 0);
  for (std::size_t i : exclude_txs)
    if (i < excluded.size()) excluded[i] = 1;

  for (const auto& m : measurements) {
    const auto& sensor = sensors.sensors.at(static_cast<std::size_t>(m.sensor_id));
    for (std::size_t t = 0; t < known_txs.size() && t < m.per_tx_w.size(); ++t) {
      if (excluded[t]) continue;
      const double d = distance(known_txs[t]->location, sensor.location);
      if (d <= 1.0) continue;  // inside the path-gain clamp, no slope information
      const double w = m.per_tx_w[t];
      if (!(w > 0.0)) continue;
      const double x = 10.0 * std::log10(d);
      const double y = watt_to_dbm(w) - watt_to_dbm(known_txs[t]->tx_power_w);
      xs[sensor.section].push_back(x);
      ys[sensor.section].push_back(y);
      all_x.push_back(x);
      all_y.push_back(y);
    }
  }

  PropagationEstimate est;
  const LinearFit global = fit_line(all_x, all_y);
  est.region.underdetermined = !global.ok;
  est.region.alpha_hat = global.ok ? -global.slope : PropagationModel{}.alpha;
  est.region.shadow_db = global.ok ? global.intercept : 0.0;

  // Section fits are shrunk toward the pooled fit by precision: a section's
  // sensors span a narrow distance range, so its raw slope can be far off
  // while the pooled regression is tight. Exact (zero-residual) local fits
  // keep full weight.
  est.sections.resize(static_cast<std::size_t>(n_sections));
  for (int s = 0; s < n_sections; ++s) {
    const LinearFit f = fit_line(xs[s], ys[s]);
    if (f.ok && global.ok) {
      est.sections[s] = {-precision_blend(f.slope, f.slope_se2, global.slope, global.slope_se2),
                         precision_blend(f.intercept, f.intercept_se2, global.intercept,
                                         global.intercept_se2),
                         false};
    } else if (f.ok) {
      est.sections[s] = {-f.slope, f.intercept, false};
    } else {
      est.sections[s] = est.region;
      est.sections[s].underdetermined = true;
    }
  }
  return est;
}

namespace {

/// Back-solved transmit power of one transmitter as seen by one sensor.
/// Returns a non-positive value when the sensor cannot attribute the signal.
double backsolve_power(const Measurement& m, const SensorGrid::Sensor& sensor,
                       const TransmitterSpec& tx, std::size_t tx_index,
                       const PropagationEstimate& prop) {
  if (tx_index >= m.per_tx_w.size()) return 0.0;
  const double w = m.per_tx_w[tx_index];
  if (!(w > 0.0)) return 0.0;
  const double ant = tx.antenna.gain_toward(tx.location, sensor.location);
  if (!(ant > 0.0)) return 0.0;
  const double g = prop.gain(sensor.section, distance(tx.location, sensor.location)) *
                   prop.shadow_factor(sensor.section);
  return w / (ant * g);
}

std::vector<int> nearest_sensor_order(const SensorGrid& sensors, Point p) {
  std::vector<int> order(sensors.sensors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double da = distance(sensors.sensors[a].location, p);
    const double db = distance(sensors.sensors[b].location, p);
    if (da != db) return da < db;
    return a < b;
  });
  return order;
}

}  // namespace

TxPowerEstimate estimate_tx_power(std::size_t tx_index, std::span<const Measurement> measurements,
                                  const SensorGrid& sensors,
                                  std::span<const TransmitterSpec* const> known_txs,
                                  const PropagationEstimate& prop, int max_sensors) {
  const TransmitterSpec& tx = *known_txs[tx_index];
  TxPowerEstimate out;
  // Inverse-distance-weighted dB mean over the attributing sensors: the
  // nearest sensor dominates but independent shadowing still averages down as
  // the deployment densifies.
  double sum_db = 0.0, sum_w = 0.0;
  for (int sid : nearest_sensor_order(sensors, tx.location)) {
    if (max_sensors > 0 && out.n_sensors >= max_sensors) break;
    const double p = backsolve_power(measurements[sid], sensors.sensors[sid], tx, tx_index, prop);
    if (!(p > 0.0)) continue;
    const double w = 1.0 / std::max(1.0, distance(sensors.sensors[sid].location, tx.location));
    sum_db += w * watt_to_dbm(p);
    sum_w += w;
    ++out.n_sensors;
  }
  if (out.n_sensors > 0) out.power_w = dbm_to_watt(sum_db / sum_w);
  return out;
}

EstimatedMaps estimate_maps(std::span<const Measurement> measurements, const SensorGrid& sensors,
                            const PropagationEstimate& prop, const EstimationInputs& inputs,
                            const HexGrid& grid) {
  EstimatedMaps out{{grid, SpectrumFrame{}, {}, {}}, {}, {}};
  const std::size_t n_tx = inputs.known_txs.size();
  const double fusion_radius =
      inputs.fusion_radius_m > 0.0
          ? inputs.fusion_radius_m
          : 1.5 * std::hypot(sensors.section_w_m, sensors.section_h_m);

  // Global per-transmitter power estimates (used for declared-receiver margins
  // and reported for conformance checks).
  std::vector<const TransmitterSpec*> tx_ptrs;
  for (const auto& t : inputs.known_txs) tx_ptrs.push_back(&t);
  std::vector<TxPowerEstimate> tx_power(n_tx);
  for (std::size_t t = 0; t < n_tx; ++t) {
    tx_power[t] = estimate_tx_power(t, measurements, sensors, tx_ptrs, prop);
    out.tx_powers[inputs.known_txs[t].id] = tx_power[t];
  }

  // Declared receivers: estimated margins and aggregates (worst-case
  // alignment, consistent with the ground-truth pipeline).
  std::vector<ReceiverState> rx_states;
  for (const auto& rx : inputs.declared_rxs) {
    double s_hat = 0.0;
    double aggregate = 0.0;
    for (std::size_t t = 0; t < n_tx; ++t) {
      const TransmitterSpec& tx = inputs.known_txs[t];
      const int rx_sec = sensors.section_of(rx.location);
      const double g = prop.gain(rx_sec, distance(tx.location, rx.location)) *
                       prop.shadow_factor(rx_sec);
      if (tx.id == rx.served_by) {
        s_hat = rx.experienced_sinr
                    ? *rx.experienced_sinr * rx.noise_w
                    : tx_power[t].power_w * tx.antenna.gain_toward(tx.location, rx.location) *
                          rx.antenna.gain_toward(rx.location, tx.location) * g;
      } else {
        aggregate += tx_power[t].power_w * g;
      }
    }
    rx_states.push_back({rx.location, std::max(0.0, s_hat / rx.beta_min - rx.noise_w), aggregate});
  }

  // Propagation model view for the opportunity translation at each cell.
  const std::int64_t n_cells = grid.cell_count();
  out.map.cells.resize(static_cast<std::size_t>(n_cells));
  out.confidence.resize(static_cast<std::size_t>(n_cells), 1.0);

  KahanSum ut, fb, av;
  for (std::int64_t i = 0; i < n_cells; ++i) {
    const CellIndex cell = grid.cell_at(i);
    const Point ctr = grid.center(cell);
    const int sec = sensors.section_of(ctr);

    const auto order = nearest_sensor_order(sensors, ctr);
    std::vector<std::pair<int, double>> sources;  // sensor id, weight
    if (!order.empty() && distance(sensors.sensors[order[0]].location, ctr) <= fusion_radius) {
      sources.emplace_back(order[0], 1.0);
    } else {
      for (std::size_t k = 0; k < order.size() && k < 3; ++k) {
        const double d = std::max(1.0, distance(sensors.sensors[order[k]].location, ctr));
        sources.emplace_back(order[k], 1.0 / d);
      }
      out.confidence[i] = 0.5;
    }

    double noise = 0.0;
    double wsum = 0.0;
    for (const auto& [sid, w] : sources) {
      noise += w * measurements[sid].noise_floor_w;
      wsum += w;
    }
    if (wsum > 0.0) noise /= wsum;

    double occupancy = noise;
    for (std::size_t t = 0; t < n_tx; ++t) {
      if (tx_power[t].n_sensors == 0) continue;
      const TransmitterSpec& tx = inputs.known_txs[t];
      occupancy += tx_power[t].power_w * tx.antenna.gain_toward(tx.location, ctr) *
                   prop.gain(sec, distance(tx.location, ctr)) * prop.shadow_factor(sec);
    }

    double opportunity = inputs.bounds.p_max_w - occupancy;
    for (const auto& rs : rx_states) {
      const double g = prop.gain(sec, distance(rs.location, ctr));
      const double remaining = rs.margin_w - rs.aggregate_w;
      const double translated =
          inputs.bound_form == BoundForm::inverse ? remaining / g : remaining * g;
      opportunity = std::min(opportunity, translated);
    }
    opportunity = std::max(opportunity, -(inputs.bounds.p_max_w - inputs.bounds.p_min_w));
    const double liability = inputs.bounds.p_max_w - (occupancy + opportunity);

    out.map.cells[i] = {cell, 0, 0, occupancy, opportunity, liability};
    ut.add(occupancy);
    av.add(opportunity);
    fb.add(liability);
  }
  out.map.totals = {total_space(grid, out.map.frame, inputs.bounds), ut.value(), fb.value(),
                    av.value()};
  return out;
}

MapErrorStats map_error(const ConsumptionMap& estimated, const ConsumptionMap& truth,
                        double floor_w) {
  if (estimated.grid.cols() != truth.grid.cols() || estimated.grid.rows() != truth.grid.rows() ||
      estimated.grid.side() != truth.grid.side() || estimated.cells.size() != truth.cells.size())
    throw ConfigError("map_error: grids do not match");
  MapErrorStats st;
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.cells.size(); ++i) {
    const double e = std::max(estimated.cells[i].occupancy_w, floor_w);
    const double t = std::max(truth.cells[i].occupancy_w, floor_w);
    const double d = std::abs(10.0 * std::log10(e / t));
    sum += d;
    st.max_abs_occupancy_db = std::max(st.max_abs_occupancy_db, d);
    const int ta = truth.cells[i].opportunity_w > 0.0 ? 1 : 0;
    const int ea = estimated.cells[i].opportunity_w > 0.0 ? 1 : 0;
    ++st.availability_confusion[ta][ea];
  }
  st.mean_abs_occupancy_db = truth.cells.empty() ? 0.0 : sum / double(truth.cells.size());
  return st;
}

}  // namespace squant
