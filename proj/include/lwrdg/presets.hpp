#pragma once

#include <string>
#include <vector>

#include "lwrdg/network.hpp"

namespace lwrdg {

/// Built-in scenario configurations. Names:
///   accuracy, accuracy-step, bottleneck-1, bottleneck-2, bottleneck-3,
///   two-one, two-two-const, two-two-step, traffic-circle
/// Throws config_error for unknown names.
NetworkConfig build_preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace lwrdg
