#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lwrdg/config_io.hpp"
#include "lwrdg/errors.hpp"
#include "lwrdg/output.hpp"
#include "lwrdg/presets.hpp"
#include "lwrdg/verification.hpp"

namespace py = pybind11;
using namespace lwrdg;

namespace {

JunctionKind kind_from_string(const std::string& name) {
  if (name == "1x1") return JunctionKind::OneOne;
  if (name == "1x2") return JunctionKind::OneTwo;
  if (name == "2x1") return JunctionKind::TwoOne;
  if (name == "2x2") return JunctionKind::TwoTwo;
  throw py::value_error("junction kind must be one of 1x1, 1x2, 2x1, 2x2");
}

std::vector<double> road_averages(const NetworkState& state, int road) {
  const auto& rs = state.roads.at(road);
  std::vector<double> avg(rs.n_cells());
  for (int j = 0; j < rs.n_cells(); ++j) avg[j] = rs.average(j);
  return avg;
}

}  // namespace

PYBIND11_MODULE(lwrdg, m) {
  m.doc() = "Bound-preserving RKDG solver for LWR traffic flow on road networks";

  py::register_exception<config_error>(m, "ConfigError");
  py::register_exception<integrity_error>(m, "IntegrityError");

  py::class_<FluxModel>(m, "FluxModel")
      .def_static("quadratic", &FluxModel::quadratic, py::arg("rho_max"),
                  py::arg("v_free"))
      .def_static(
          "custom",
          [](std::function<double(double)> f, std::function<double(double)> fp,
             double rho_max) { return FluxModel::custom(std::move(f), std::move(fp), rho_max); },
          py::arg("f"), py::arg("f_prime"), py::arg("rho_max"))
      .def_property_readonly("rho_max", &FluxModel::rho_max)
      .def_property_readonly("sigma", &FluxModel::sigma)
      .def_property_readonly("lf_alpha", &FluxModel::lf_alpha)
      .def_property_readonly("max_flux", &FluxModel::max_flux)
      .def("flux", &FluxModel::flux)
      .def("wave_speed", &FluxModel::wave_speed)
      .def("tau", &FluxModel::tau)
      .def("demand", &FluxModel::demand)
      .def("supply", &FluxModel::supply)
      .def("lax_friedrichs", &FluxModel::lax_friedrichs)
      .def("godunov", &FluxModel::godunov);

  py::class_<JunctionFluxes>(m, "JunctionFluxes")
      .def_readonly("gamma_in", &JunctionFluxes::gamma_in)
      .def_readonly("gamma_out", &JunctionFluxes::gamma_out)
      .def("total_in", &JunctionFluxes::total_in)
      .def("total_out", &JunctionFluxes::total_out);

  m.def("solve_one_one", &solve_one_one, py::arg("demand_a"), py::arg("supply_b"));
  m.def("solve_one_two", &solve_one_two, py::arg("demand_a"), py::arg("supply_b"),
        py::arg("supply_c"), py::arg("alpha"));
  m.def("solve_two_one", &solve_two_one, py::arg("demand_a"), py::arg("demand_b"),
        py::arg("supply_c"), py::arg("q"));
  m.def("solve_two_two", &solve_two_two, py::arg("demand_a"), py::arg("demand_b"),
        py::arg("supply_c"), py::arg("supply_d"), py::arg("alpha"), py::arg("beta"));

  m.def(
      "reconstruct_trace_density",
      [](const FluxModel& model, double rho0, double gamma_hat, const std::string& side) {
        if (side != "incoming" && side != "outgoing")
          throw py::value_error("side must be 'incoming' or 'outgoing'");
        return reconstruct_trace_density(
            model, rho0, gamma_hat,
            side == "incoming" ? TraceSide::Incoming : TraceSide::Outgoing);
      },
      py::arg("model"), py::arg("rho0"), py::arg("gamma_hat"), py::arg("side"));

  m.def(
      "lp_junction_oracle",
      [](const std::string& kind, std::vector<double> demands, std::vector<double> supplies,
         double alpha, double beta, double q, double resolution) {
        return lp_junction_oracle(kind_from_string(kind), demands, supplies, alpha, beta,
                                  q, resolution);
      },
      py::arg("kind"), py::arg("demands"), py::arg("supplies"), py::arg("alpha") = 0.0,
      py::arg("beta") = 0.0, py::arg("q") = 0.0, py::arg("resolution") = 1e-3);

  m.def("exact_smooth_solution", &exact_smooth_solution, py::arg("x"), py::arg("t"));
  m.def("jam_threshold", &jam_threshold, py::arg("upstream"), py::arg("downstream"));

  py::class_<SolverParams>(m, "SolverParams")
      .def_readwrite("degree", &SolverParams::degree)
      .def_readwrite("cfl", &SolverParams::cfl)
      .def_readwrite("tvb", &SolverParams::tvb_enabled)
      .def_readwrite("tvb_m", &SolverParams::tvb_m)
      .def_readwrite("bp", &SolverParams::bp_enabled)
      .def_readwrite("t_end", &SolverParams::t_end)
      .def_readwrite("output_times", &SolverParams::output_times)
      .def_readwrite("samples_per_cell", &SolverParams::samples_per_cell)
      .def_property(
          "numerical_flux",
          [](const SolverParams& s) {
            return s.flux_kind == NumericalFlux::Godunov ? "godunov" : "lax-friedrichs";
          },
          [](SolverParams& s, const std::string& name) {
            if (name == "godunov") s.flux_kind = NumericalFlux::Godunov;
            else if (name == "lax-friedrichs") s.flux_kind = NumericalFlux::LaxFriedrichs;
            else throw py::value_error("numerical_flux must be lax-friedrichs or godunov");
          });

  py::class_<NetworkConfig>(m, "NetworkConfig")
      .def_readwrite("solver", &NetworkConfig::solver)
      .def_property_readonly("road_ids",
                             [](const NetworkConfig& cfg) {
                               std::vector<std::string> ids;
                               for (const auto& r : cfg.roads) ids.push_back(r.id);
                               return ids;
                             })
      .def("set_cells",
           [](NetworkConfig& cfg, int cells) {
             for (auto& r : cfg.roads) r.cells = cells;
           })
      .def("to_json", &config_to_json);

  py::class_<RunSummary>(m, "RunSummary")
      .def_readonly("mass_initial", &RunSummary::mass_initial)
      .def_readonly("mass_final", &RunSummary::mass_final)
      .def_readonly("boundary_flux_integral", &RunSummary::boundary_flux_integral)
      .def_readonly("conservation_residual", &RunSummary::conservation_residual)
      .def_readonly("n_steps", &RunSummary::n_steps)
      .def_readonly("dt_min", &RunSummary::dt_min)
      .def_readonly("dt_max", &RunSummary::dt_max)
      .def_readonly("min_density", &RunSummary::min_density)
      .def_readonly("max_density", &RunSummary::max_density);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("summary", &RunResult::summary)
      .def_property_readonly("time",
                             [](const RunResult& r) { return r.final_state.time; })
      .def("cell_averages",
           [](const RunResult& r, int road) { return road_averages(r.final_state, road); },
           py::arg("road"))
      .def("snapshot_times",
           [](const RunResult& r) {
             std::vector<double> t;
             for (const auto& s : r.snapshots) t.push_back(s.time);
             return t;
           })
      .def("snapshot_cell_averages",
           [](const RunResult& r, int snapshot, int road) {
             return road_averages(r.snapshots.at(snapshot).state, road);
           },
           py::arg("snapshot"), py::arg("road"))
      .def("sample",
           [](const RunResult& r, int road, int samples_per_cell) {
             std::vector<std::tuple<double, double, double>> out;
             for (const auto& s :
                  sample_road(r.final_state.roads.at(road), samples_per_cell))
               out.emplace_back(s.x, s.value, s.cell_average);
             return out;
           },
           py::arg("road"), py::arg("samples_per_cell") = 4);

  m.def("build_preset", &build_preset, py::arg("name"));
  m.def("preset_names", &preset_names);
  m.def("config_from_json", &config_from_json, py::arg("text"));
  m.def("run_network", [](const NetworkConfig& cfg) { return run_network(cfg); },
        py::arg("config"));
  m.def(
      "write_outputs",
      [](const NetworkConfig& cfg, const RunResult& result, const std::string& dir) {
        write_outputs(cfg, result, dir);
      },
      py::arg("config"), py::arg("result"), py::arg("dir"));

  py::class_<ErrorRow>(m, "ErrorRow")
      .def_readonly("n_cells", &ErrorRow::n_cells)
      .def_readonly("l1", &ErrorRow::l1)
      .def_readonly("l1_order", &ErrorRow::l1_order)
      .def_readonly("linf", &ErrorRow::linf)
      .def_readonly("linf_order", &ErrorRow::linf_order)
      .def_readonly("min_val", &ErrorRow::min_val)
      .def_readonly("max_val", &ErrorRow::max_val);

  m.def(
      "convergence_study",
      [](int degree, std::vector<int> meshes, bool bp) {
        return convergence_study(degree, meshes, bp).rows;
      },
      py::arg("degree"), py::arg("meshes"), py::arg("bp"));
}
