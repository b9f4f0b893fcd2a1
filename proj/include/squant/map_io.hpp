#pragma once

#include <string>
#include <vector>

#include "squant/quantify.hpp"

namespace squant {

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);
double parse_double(const std::string& s);

/// Write a consumption map as CSV, one row per (cell, quantum, band):
///   col,row,center_x_m,center_y_m,quantum,band,occupancy_w,opportunity_w,liability_w
/// LF line endings, shortest round-trip decimals. When `confidence` is
/// non-empty (one entry per row) a trailing confidence column is appended.
void export_map(const ConsumptionMap& map, const std::string& path,
                const std::vector<double>& confidence = {});

/// Re-read an exported map. Grid geometry is reconstructed from the rows;
/// values round-trip bit-exactly.
ConsumptionMap import_map(const std::string& path, double side_m, const SpectrumFrame& frame,
                          const PowerBounds& bounds);

/// Totals summary CSV: quantity,w_cell,w_m2,pct_of_total.
void export_totals(const ConsumptionMap& map, const std::string& path);

}  // namespace squant
