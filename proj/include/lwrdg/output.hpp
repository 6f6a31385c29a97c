#pragma once

#include <filesystem>

#include "lwrdg/network.hpp"

namespace lwrdg {

/// Writes one CSV per road per snapshot (<dir>/<road_id>/t<time>.csv, columns
/// x,rho,cell_avg) plus <dir>/summary.json with the mass audit, step counts
/// and density extremes.
void write_outputs(const NetworkConfig& cfg, const RunResult& result,
                   const std::filesystem::path& dir);

}  // namespace lwrdg
