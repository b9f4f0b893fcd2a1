#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "squant/sam.hpp"
#include "squant/topology.hpp"

namespace squant {

struct CompareRow {
  Mechanism mechanism;
  int n_secondary = 0;
  std::uint64_t seed = 0;
  SamMetrics metrics;
};

/// Evaluate each mechanism over generated topologies: one row per
/// (mechanism, n_secondary, seed). Deterministic per seed.
std::vector<CompareRow> compare_sams(std::span<const Mechanism> mechanisms,
                                     std::span<const int> n_secondary_list, int n_seeds,
                                     std::uint64_t seed_base, const TopologyParams& base,
                                     const SamConfig& base_cfg);

struct RecoveryRow {
  double sensitivity_dbm = 0.0;
  double max_su_power_dbm = 0.0;
  double recovered_w_cell = 0.0;
  double available_w_cell = 0.0;
  double recovered_pct = 0.0;
};

/// Opportunistic-access recovery: per (sensitivity, power cap), the share of
/// the pre-existing available spectrum the scenario's secondary transceivers
/// can exercise. Every secondary device senses at its own location and, when
/// access is permitted, may emit up to the cap; per-cell recovery is limited
/// by the cell's available opportunity.
std::vector<RecoveryRow> recovery_sweep(const Scenario& sc, const HexGrid& grid,
                                        std::span<const double> sensitivities_dbm,
                                        std::span<const double> caps_dbm);

struct RangeRow {
  Mechanism mechanism;
  double range_m = 0.0;
  std::uint64_t seed = 0;
  SamMetrics metrics;
};

/// Admission performance versus the secondary service range, incumbent active.
std::vector<RangeRow> range_sweep(std::span<const Mechanism> mechanisms,
                                  std::span<const double> ranges_m, int n_requests, int n_seeds,
                                  std::uint64_t seed_base, const TopologyParams& base,
                                  const SamConfig& base_cfg);

void export_compare_csv(std::span<const CompareRow> rows, const std::string& path);
void export_recovery_csv(std::span<const RecoveryRow> rows, const std::string& path);
void export_range_csv(std::span<const RangeRow> rows, const std::string& path);

}  // namespace squant
