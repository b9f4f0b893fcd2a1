#include "squant/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "squant/errors.hpp"

namespace squant {

void RunManifest::write(const std::string& path) const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["scenario"] = scenario_path;
  j["seed"] = seed;
  j["out"] = out_dir;
  j["overrides"] = overrides;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  out << j.dump(2) << "\n";
  if (!out) throw IoError(path, "write failed");
}

}  // namespace squant
