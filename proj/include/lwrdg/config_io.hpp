#pragma once

#include <filesystem>
#include <string>

#include "lwrdg/network.hpp"

namespace lwrdg {

/// Parse a JSON network config. Throws config_error naming the offending key.
NetworkConfig config_from_json(const std::string& text);
NetworkConfig load_config(const std::filesystem::path& path);

/// Serialize so that parsing the result reproduces the config bit-exactly.
std::string config_to_json(const NetworkConfig& cfg);
void save_config(const NetworkConfig& cfg, const std::filesystem::path& path);

}  // namespace lwrdg
