#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace squant {

/// Reproducibility record written next to every CLI run's outputs. A run with
/// the same manifest produces byte-identical CSVs.
struct RunManifest {
  std::string subcommand;
  std::string scenario_path;  // empty when the run uses a built-in setup
  std::uint64_t seed = 0;
  std::string out_dir;
  std::map<std::string, std::string> overrides;

  void write(const std::string& path) const;
};

}  // namespace squant
