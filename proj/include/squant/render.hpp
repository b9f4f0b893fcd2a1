#pragma once

#include <string>

#include "squant/quantify.hpp"

namespace squant {

enum class MapField { occupancy, opportunity, liability };

/// Presentation-only SVG heatmap of one field of a consumption map (first
/// quantum / band slice). Carries no format contract.
void render_svg(const ConsumptionMap& map, MapField field, const std::string& path);

}  // namespace squant
