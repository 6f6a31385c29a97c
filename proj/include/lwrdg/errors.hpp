#pragma once

#include <stdexcept>
#include <string>

namespace lwrdg {

// Invalid user-supplied configuration (unknown keys, out-of-range parameters,
// inconsistent topology).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency violation detected while running (trace out of bounds,
// cell average outside the admissible interval, NaN in the solution).
struct integrity_error : std::runtime_error {
  explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lwrdg
