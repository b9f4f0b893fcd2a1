#pragma once

#include <stdexcept>
#include <string>

namespace squant {

/// Bad configuration supplied programmatically (dimensions, parameter ranges).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file or scenario object failed validation. Carries the JSON
/// pointer path of the offending element when known.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// A computation violated one of the library's internal invariants.
/// Always a bug, never a user error.
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

/// File I/O failure with path context.
class IoError : public std::runtime_error {
public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what) {}
};

}  // namespace squant
