#pragma once

#include <span>
#include <string>
#include <vector>

#include "lwrdg/network.hpp"

namespace lwrdg {

/// Entropy solution of the smooth accuracy problem rho_t + (rho(1-rho))_x = 0,
/// rho(x,0) = 0.5 + 0.5 sin(2 pi x), at a pre-shock time: solves the implicit
/// characteristic equation by Newton iteration (residual tolerance 1e-14).
/// Throws std::runtime_error when Newton stalls (post-shock query).
double exact_smooth_solution(double x, double t);

/// Brute-force grid search for the junction flux optimization: maximizes the
/// incoming-flux sum over the feasible region, tie-broken by closeness to the
/// right-of-way line (2x1). Refines the grid around the winner, so the result
/// is accurate well below `resolution`. Independent oracle for the
/// closed-form solvers.
JunctionFluxes lp_junction_oracle(JunctionKind kind, std::span<const double> demands,
                                  std::span<const double> supplies, double alpha,
                                  double beta, double q, double resolution = 1e-3);

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

/// L1 by (k+2)-point Gauss-Legendre per cell; Linf over those nodes plus the
/// cell endpoints.
ErrorNorms error_norms(const RoadState& state, const DensityField& exact);

struct ErrorRow {
  int n_cells = 0;
  double l1 = 0.0, l1_order = 0.0;
  double linf = 0.0, linf_order = 0.0;
  double min_val = 0.0, max_val = 0.0;
};

struct ErrorReport {
  int degree = 0;
  bool bp = false;
  std::vector<ErrorRow> rows;
};

/// Fills the order columns: log2(e_N / e_2N) between successive rows,
/// normalized by the refinement ratio.
void compute_orders(ErrorReport& report);

/// Accuracy study on the periodic smooth problem up to t = 0.1: one run per
/// mesh, L1/Linf errors against the Newton exact solution, orders between
/// successive refinements as log2 ratios, min/max of the solution at the
/// Gauss-Lobatto nodes over the run. BP runs drop the CFL to 0.05 for degrees
/// 2 and 3 so the spatial error dominates.
ErrorReport convergence_study(int degree, std::span<const int> meshes, bool bp_enabled);

/// Build the periodic smooth-problem config used by convergence_study.
NetworkConfig accuracy_config(int degree, int n_cells, bool bp_enabled);

std::string format_error_report(const ErrorReport& report);
std::string error_report_csv(const ErrorReport& report);

/// First-order Godunov finite-volume run of the same network on a refined
/// mesh (reference solution). Limiters off, dt = 0.5 dx.
RunResult reference_run(NetworkConfig cfg, int cells_per_road);

/// L1 distance between cell averages of a coarse road and of a refined road
/// on the same interval, with the fine averages aggregated onto the coarse
/// mesh. Requires the fine cell count to be a multiple of the coarse one.
double l1_vs_reference(const RoadState& coarse, const RoadState& fine);

/// Largest upstream density (below the upstream critical density) whose flux
/// does not exceed the downstream capacity; inflow above it triggers a jam.
double jam_threshold(const FluxModel& upstream, const FluxModel& downstream);

}  // namespace lwrdg
