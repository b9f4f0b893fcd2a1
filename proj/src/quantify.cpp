#include "squant/quantify.hpp"

#include <cmath>

#include "squant/threading.hpp"

namespace squant {

ScenarioSlice build_slice(const Scenario& sc, int quantum, int band) {
  ScenarioSlice slice;
  for (const auto& n : sc.networks) {
    if (!n.active_in(quantum, band)) continue;
    slice.transmitters.push_back(n.transmitter);
  }
  for (const auto& n : sc.networks) {
    if (!n.active_in(quantum, band)) continue;
    for (const auto& rx : n.receivers) {
      const TransmitterSpec* serving = sc.find_transmitter(rx.served_by);
      if (serving == nullptr)
        throw ValidationError("", "receiver '" + rx.id + "' references unknown transmitter '" +
                                      rx.served_by + "'");
      const InterferenceMargin im = interference_margin(rx, *serving, sc.prop);
      double aggregate = 0.0;
      for (const auto& m : sc.networks) {
        if (!m.active_in(quantum, band) || m.transmitter.id == rx.served_by) continue;
        aggregate += m.transmitter.tx_power_w *
                     sc.prop.gain(distance(m.transmitter.location, rx.location));
      }
      slice.receivers.push_back({rx.location, im.watts, aggregate});
    }
  }
  return slice;
}

CellConsumption quantify_cell(const Scenario& sc, const HexGrid& grid, CellIndex cell, int quantum,
                              int band, const ScenarioSlice& slice) {
  const PointConsumption pc =
      consumption_at(grid.center(cell), slice.transmitters, slice.receivers, sc.ambient_noise_w,
                     sc.bounds, sc.prop, sc.bound_form);
  return {cell, quantum, band, pc.occupancy_w, pc.opportunity_w, pc.liability_w};
}

double total_space(const HexGrid& grid, const SpectrumFrame& frame, const PowerBounds& bounds) {
  return bounds.p_max_w * static_cast<double>(grid.cell_count()) * frame.band_count() *
         frame.quantum_count();
}

ConsumptionMap aggregate(const Scenario& sc, const HexGrid& grid) {
  ConsumptionMap map{grid, sc.frame, {}, {}};
  const std::int64_t cells = grid.cell_count();
  const int bands = sc.frame.band_count();
  const int quanta = sc.frame.quantum_count();
  map.cells.resize(cells * bands * quanta);

  for (int t = 0; t < quanta; ++t) {
    for (int b = 0; b < bands; ++b) {
      const ScenarioSlice slice = build_slice(sc, t, b);
      CellConsumption* out = map.cells.data() + (static_cast<std::int64_t>(t) * bands + b) * cells;
      parallel_for(cells, [&](std::int64_t i) {
        out[i] = quantify_cell(sc, grid, grid.cell_at(i), t, b, slice);
      });
    }
  }

  KahanSum ut, fb, av;
  for (const auto& c : map.cells) {
    ut.add(c.occupancy_w);
    av.add(c.opportunity_w);
    fb.add(c.liability_w);
  }
  map.totals.total = total_space(grid, sc.frame, sc.bounds);
  map.totals.utilized = ut.value();
  map.totals.forbidden = fb.value();
  map.totals.available = av.value();

  const double closure = map.totals.utilized + map.totals.forbidden + map.totals.available;
  if (std::abs(closure - map.totals.total) > 1e-9 * map.totals.total)
    throw InvariantError("spectrum-space conservation identity violated");
  return map;
}

ConsumptionMap aggregate(const Scenario& sc) { return aggregate(sc, sc.grid.build()); }

std::vector<SweepRow> discretization_sweep(const Scenario& sc, std::span<const double> sides_m) {
  const HexGrid base = sc.grid.build();
  const Point extent = base.extent();
  std::vector<SweepRow> rows;
  rows.reserve(sides_m.size());
  for (double side : sides_m) {
    const HexGrid g = HexGrid::covering(side, extent.x, extent.y, base.origin());
    const ConsumptionMap m = aggregate(sc, g);
    SweepRow row{side, g.cell_count(), m.totals, 0.0, 0.0, 0.0};
    row.utilized_frac = m.totals.utilized / m.totals.total;
    row.forbidden_frac = m.totals.forbidden / m.totals.total;
    row.available_frac = m.totals.available / m.totals.total;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace squant
