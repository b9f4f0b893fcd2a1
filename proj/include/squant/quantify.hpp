#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "squant/scenario.hpp"
#include "squant/summation.hpp"

namespace squant {

/// Consumption at one (cell, quantum, band) sample.
struct CellConsumption {
  CellIndex cell;
  int quantum = 0;
  int band = 0;
  double occupancy_w = 0.0;
  double opportunity_w = 0.0;
  double liability_w = 0.0;
};

/// The four spectrum-space totals over all cells, quanta and bands, in W*cell.
struct SpectrumSpaceTotals {
  double total = 0.0;
  double utilized = 0.0;
  double forbidden = 0.0;
  double available = 0.0;
};

struct ConsumptionMap {
  HexGrid grid;
  SpectrumFrame frame;
  std::vector<CellConsumption> cells;  // order: quantum-major, then band, then cell
  SpectrumSpaceTotals totals;

  std::int64_t slice_size() const { return grid.cell_count(); }
  const CellConsumption& at(std::int64_t cell_flat, int quantum, int band) const {
    const std::int64_t slice =
        (static_cast<std::int64_t>(quantum) * frame.band_count() + band) * slice_size();
    return cells[slice + cell_flat];
  }
};

/// Transceivers active in one (quantum, band) slice, with per-receiver
/// interference margins and experienced aggregates precomputed.
struct ScenarioSlice {
  std::vector<TransmitterSpec> transmitters;
  std::vector<ReceiverState> receivers;
};

/// Build the active slice for (quantum, band). Receiver aggregates use
/// worst-case antenna alignment: every cochannel transmitter except the
/// serving one contributes through the path gain alone.
ScenarioSlice build_slice(const Scenario& sc, int quantum, int band);

/// Point-sample consumption of a cell at its centroid.
CellConsumption quantify_cell(const Scenario& sc, const HexGrid& grid, CellIndex cell, int quantum,
                              int band, const ScenarioSlice& slice);

/// Total spectrum space: p_max * cells * bands * quanta, in W*cell.
double total_space(const HexGrid& grid, const SpectrumFrame& frame, const PowerBounds& bounds);

/// Quantify every (cell, quantum, band) sample and reduce to the four totals
/// with compensated summation in canonical cell order. Throws InvariantError
/// if the conservation identity fails beyond 1e-9 relative.
ConsumptionMap aggregate(const Scenario& sc, const HexGrid& grid);
ConsumptionMap aggregate(const Scenario& sc);

struct SweepRow {
  double side_m = 0.0;
  std::int64_t cells = 0;
  SpectrumSpaceTotals totals;
  double utilized_frac = 0.0;
  double forbidden_frac = 0.0;
  double available_frac = 0.0;
};

/// Re-quantify the scenario at several cell sides over the same region.
/// Fractions of the total make the rows comparable across sides.
std::vector<SweepRow> discretization_sweep(const Scenario& sc, std::span<const double> sides_m);

}  // namespace squant
