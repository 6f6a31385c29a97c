#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lwrdg/config_io.hpp"
#include "lwrdg/errors.hpp"
#include "lwrdg/output.hpp"
#include "lwrdg/presets.hpp"
#include "lwrdg/verification.hpp"

namespace {

using namespace lwrdg;

struct RunOptions {
  std::string preset;
  std::string config_file;
  int degree = -1;
  int cells = 0;
  double t_end = 0.0;
  double cfl = 0.0;
  double tvb_m = -1.0;
  bool no_tvb = false;
  bool no_bp = false;
  std::string flux;
  std::string out_dir = "out";
  std::string dump_config;
};

NetworkConfig resolve_config(const RunOptions& opt) {
  if (opt.preset.empty() == opt.config_file.empty())
    throw config_error("exactly one of --preset and --config is required");
  NetworkConfig cfg = opt.preset.empty() ? load_config(opt.config_file)
                                         : build_preset(opt.preset);
  if (opt.degree >= 0) {
    cfg.solver.degree = opt.degree;
    for (auto& r : cfg.roads) r.degree.reset();
  }
  if (opt.cells > 0)
    for (auto& r : cfg.roads) r.cells = opt.cells;
  if (opt.t_end > 0.0) {
    cfg.solver.t_end = opt.t_end;
    cfg.solver.output_times.erase(
        std::remove_if(cfg.solver.output_times.begin(), cfg.solver.output_times.end(),
                       [&](double t) { return t > opt.t_end; }),
        cfg.solver.output_times.end());
    cfg.solver.output_times.push_back(opt.t_end);
  }
  if (opt.cfl > 0.0) cfg.solver.cfl = opt.cfl;
  if (opt.tvb_m >= 0.0) {
    cfg.solver.tvb_m = opt.tvb_m;
    cfg.solver.tvb_enabled = true;
  }
  if (opt.no_tvb) cfg.solver.tvb_enabled = false;
  if (opt.no_bp) cfg.solver.bp_enabled = false;
  if (!opt.flux.empty()) {
    if (opt.flux == "godunov") cfg.solver.flux_kind = NumericalFlux::Godunov;
    else if (opt.flux == "lax-friedrichs") cfg.solver.flux_kind = NumericalFlux::LaxFriedrichs;
    else throw config_error("--flux must be lax-friedrichs or godunov");
  }
  return cfg;
}

int cmd_run(const RunOptions& opt) {
  const NetworkConfig cfg = resolve_config(opt);
  if (!opt.dump_config.empty()) save_config(cfg, opt.dump_config);
  const RunResult result = run_network(cfg);
  write_outputs(cfg, result, opt.out_dir);
  std::printf(
      "wrote %s (t_end=%g, steps=%ld, mass %.12g -> %.12g, conservation residual %.3e)\n",
      opt.out_dir.c_str(), result.final_state.time, result.summary.n_steps,
      result.summary.mass_initial, result.summary.mass_final,
      result.summary.conservation_residual);
  return 0;
}

int cmd_convergence(const std::vector<int>& degrees, const std::vector<int>& meshes,
                    const std::string& mode, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<bool> bp_settings;
  if (mode == "both") bp_settings = {false, true};
  else if (mode == "on") bp_settings = {true};
  else if (mode == "off") bp_settings = {false};
  else throw config_error("--bp must be both, on or off");

  for (bool bp : bp_settings) {
    const std::string stem = std::string("convergence_") + (bp ? "bp" : "nobp");
    std::ofstream txt(std::filesystem::path(out_dir) / (stem + ".txt"));
    std::ofstream csv(std::filesystem::path(out_dir) / (stem + ".csv"));
    for (int degree : degrees) {
      const ErrorReport report = convergence_study(degree, meshes, bp);
      const std::string table = format_error_report(report);
      txt << table << "\n";
      csv << error_report_csv(report);
      std::cout << table << "\n";
    }
  }
  std::printf("wrote convergence tables to %s\n", out_dir.c_str());
  return 0;
}

int cmd_junction_fuzz(int trials, unsigned seed, double resolution) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> flux_dist(0.0, 0.3);
  std::uniform_real_distribution<double> frac_dist(0.15, 0.85);
  std::uniform_real_distribution<double> q_dist(0.1, 0.9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  int mismatches = 0;
  double worst = 0.0, worst_conservation = 0.0;
  const JunctionKind kinds[] = {JunctionKind::OneOne, JunctionKind::OneTwo,
                                JunctionKind::TwoOne, JunctionKind::TwoTwo};
  const char* names[] = {"1x1", "1x2", "2x1", "2x2"};
  for (int k = 0; k < 4; ++k) {
    const JunctionKind kind = kinds[k];
    double kind_worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      auto draw = [&] { return unit(rng) < 0.05 ? 0.0 : flux_dist(rng); };
      std::vector<double> d, s;
      const int ni = (kind == JunctionKind::OneOne || kind == JunctionKind::OneTwo) ? 1 : 2;
      const int no = (kind == JunctionKind::OneOne || kind == JunctionKind::TwoOne) ? 1 : 2;
      for (int i = 0; i < ni; ++i) d.push_back(draw());
      for (int i = 0; i < no; ++i) s.push_back(draw());
      const double alpha = frac_dist(rng);
      double beta = frac_dist(rng);
      while (std::abs(beta - alpha) < 0.05) beta = frac_dist(rng);
      const double q = q_dist(rng);

      JunctionSpec spec;
      spec.kind = kind;
      spec.incoming.assign(ni, "");
      spec.outgoing.assign(no, "");
      spec.alpha = alpha;
      spec.beta = beta;
      spec.q = q;
      const JunctionFluxes closed = solve_junction(spec, d, s);
      const JunctionFluxes oracle = lp_junction_oracle(kind, d, s, alpha, beta, q, resolution);
      for (int i = 0; i < ni; ++i)
        kind_worst = std::max(kind_worst, std::abs(closed.gamma_in[i] - oracle.gamma_in[i]));
      for (int i = 0; i < no; ++i)
        kind_worst = std::max(kind_worst, std::abs(closed.gamma_out[i] - oracle.gamma_out[i]));
      worst_conservation = std::max(
          worst_conservation, std::abs(closed.total_in() - closed.total_out()));
    }
    if (kind_worst > 2e-3) ++mismatches;
    worst = std::max(worst, kind_worst);
    std::printf("%s: %d trials, max |closed-form - oracle| = %.3e\n", names[k], trials,
                kind_worst);
  }
  std::printf("max conservation defect = %.3e\n", worst_conservation);
  if (mismatches > 0 || worst_conservation > 1e-13) {
    std::printf("FAIL\n");
    return 1;
  }
  std::printf("all junction types match the oracle within 2e-3\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound-preserving RKDG solver for LWR traffic flow on road networks"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "run a scenario preset or a config file");
  run->add_option("--preset", run_opt.preset,
                  "scenario preset (see `lwrdg presets`)");
  run->add_option("--config", run_opt.config_file, "JSON config file");
  run->add_option("--degree", run_opt.degree, "polynomial degree 0..3")
      ->check(CLI::Range(0, 3));
  run->add_option("--cells", run_opt.cells, "cells per road");
  run->add_option("--t-end", run_opt.t_end, "final time");
  run->add_option("--cfl", run_opt.cfl, "CFL number override");
  run->add_option("--tvb-M", run_opt.tvb_m, "TVB limiter constant M");
  run->add_flag("--no-tvb", run_opt.no_tvb, "disable the TVB limiter");
  run->add_flag("--no-bp", run_opt.no_bp, "disable the bound-preserving limiter");
  run->add_option("--flux", run_opt.flux, "interface flux: lax-friedrichs | godunov");
  run->add_option("--out", run_opt.out_dir, "output directory");
  run->add_option("--dump-config", run_opt.dump_config,
                  "write the resolved config as JSON to this path");

  std::vector<int> degrees{0, 1, 2, 3};
  std::vector<int> meshes{10, 20, 40, 80, 160, 320};
  std::string bp_mode = "both";
  std::string conv_out = "out";
  auto* conv = app.add_subcommand("convergence",
                                  "mesh-refinement accuracy tables on the smooth problem");
  conv->add_option("--degrees", degrees, "degrees to include")->delimiter(',');
  conv->add_option("--meshes", meshes, "cell counts")->delimiter(',');
  conv->add_option("--bp", bp_mode, "both | on | off");
  conv->add_option("--out", conv_out, "output directory");

  int trials = 10000;
  unsigned seed = 20240829;
  double resolution = 1e-3;
  auto* fuzz = app.add_subcommand("junction-fuzz",
                                  "compare closed-form junction solvers with the grid oracle");
  fuzz->add_option("--trials", trials, "trials per junction type");
  fuzz->add_option("--seed", seed, "RNG seed");
  fuzz->add_option("--resolution", resolution, "oracle grid resolution");

  auto* presets = app.add_subcommand("presets", "list scenario presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (conv->parsed()) return cmd_convergence(degrees, meshes, bp_mode, conv_out);
    if (fuzz->parsed()) return cmd_junction_fuzz(trials, seed, resolution);
    if (presets->parsed()) {
      for (const auto& name : preset_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const integrity_error& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
