#include "lwrdg/output.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "lwrdg/errors.hpp"

namespace lwrdg {

namespace {

std::string time_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", t);
  return buf;
}

}  // namespace

void write_outputs(const NetworkConfig& cfg, const RunResult& result,
                   const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  for (const auto& snap : result.snapshots) {
    for (std::size_t r = 0; r < cfg.roads.size(); ++r) {
      const fs::path road_dir = dir / cfg.roads[r].id;
      fs::create_directories(road_dir);
      const fs::path file = road_dir / ("t" + time_label(snap.time) + ".csv");
      std::ofstream out(file);
      if (!out) throw config_error("cannot write " + file.string());
      out << "x,rho,cell_avg\n";
      char line[128];
      for (const auto& s :
           sample_road(snap.state.roads[r], cfg.solver.samples_per_cell)) {
        std::snprintf(line, sizeof(line), "%.12e,%.12e,%.12e\n", s.x, s.value,
                      s.cell_average);
        out << line;
      }
    }
  }

  nlohmann::json summary;
  const auto& s = result.summary;
  summary["t_end"] = result.final_state.time;
  summary["n_steps"] = s.n_steps;
  summary["dt_min"] = s.dt_min;
  summary["dt_max"] = s.dt_max;
  nlohmann::json dt_history = nlohmann::json::array();
  for (const auto& [dt, count] : s.dt_history)
    dt_history.push_back({{"dt", dt}, {"count", count}});
  summary["dt_history"] = std::move(dt_history);
  summary["mass_initial"] = s.mass_initial;
  summary["mass_final"] = s.mass_final;
  summary["boundary_flux_integral"] = s.boundary_flux_integral;
  summary["conservation_residual"] = s.conservation_residual;
  summary["min_density"] = s.min_density;
  summary["max_density"] = s.max_density;
  nlohmann::json roads = nlohmann::json::array();
  for (std::size_t r = 0; r < cfg.roads.size(); ++r) {
    const auto& rs = result.final_state.roads[r];
    double lo = rs.average(0), hi = lo;
    for (int j = 0; j < rs.n_cells(); ++j) {
      lo = std::min(lo, rs.average(j));
      hi = std::max(hi, rs.average(j));
    }
    roads.push_back({{"id", cfg.roads[r].id},
                     {"final_min_avg", lo},
                     {"final_max_avg", hi}});
  }
  summary["roads"] = std::move(roads);

  std::ofstream out(dir / "summary.json");
  if (!out) throw config_error("cannot write " + (dir / "summary.json").string());
  out << summary.dump(2) << "\n";
}

}  // namespace lwrdg
