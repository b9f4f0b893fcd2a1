#pragma once

#include <string>

#include "squant/scenario.hpp"

namespace squant {

/// Load and fully validate a scenario file (schema_version 1). Powers are dBm,
/// lengths are meters and angles are degrees in the file; everything is stored
/// in SI internally. Validation failures name the JSON pointer path.
Scenario load_scenario(const std::string& path);

Scenario scenario_from_json_text(const std::string& text, const std::string& path_for_errors = "");

void save_scenario(const Scenario& sc, const std::string& path);

std::string scenario_to_json_text(const Scenario& sc);

}  // namespace squant
