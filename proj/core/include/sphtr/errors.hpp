#pragma once

#include <stdexcept>
#include <string>

namespace sphtr {

// Invalid construction parameters or CLI/experiment configuration.
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A geometric consistency check failed (grid not symmetric under a claimed
// rotation, group closure not reached, non-bijective matching).
struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Source dataset files missing or malformed.
struct IngestionError : std::runtime_error {
  explicit IngestionError(const std::string& what) : std::runtime_error(what) {}
};

// Training diverged (non-finite gradients or parameters).
struct TrainingError : std::runtime_error {
  explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sphtr
