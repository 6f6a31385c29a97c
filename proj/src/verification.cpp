#include "lwrdg/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lwrdg/quadrature.hpp"

namespace lwrdg {

double exact_smooth_solution(double x, double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto initial = [&](double y) { return 0.5 + 0.5 * std::sin(two_pi * y); };
  double rho = initial(x);
  for (int it = 0; it < 100; ++it) {
    const double phase = two_pi * (x - (1.0 - 2.0 * rho) * t);
    const double g = rho - 0.5 - 0.5 * std::sin(phase);
    if (std::abs(g) < 1e-14) {
      if (rho < -1e-12 || rho > 1.0 + 1e-12)
        throw std::runtime_error("exact_smooth_solution: value escaped [0, 1]");
      return std::clamp(rho, 0.0, 1.0);
    }
    const double gp = 1.0 - two_pi * t * std::cos(phase);
    rho -= g / gp;
  }
  throw std::runtime_error("exact_smooth_solution: Newton did not converge (post-shock query?)");
}

namespace {

struct GridBest {
  double x = 0.0;
  double sum = -std::numeric_limits<double>::infinity();
  double tie = std::numeric_limits<double>::infinity();
};

// Scan gamma_a over [lo, hi] with the given step; partner(x) returns the best
// feasible gamma_b (negative = infeasible). Lower `tie` wins among equal sums.
template <typename Partner, typename TieBreak>
GridBest scan(double lo, double hi, double step, const Partner& partner,
              const TieBreak& tiebreak) {
  GridBest best;
  const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
  for (int i = 0; i <= n; ++i) {
    const double x = i == n ? hi : lo + i * step;
    const double y = partner(x);
    if (y < 0.0) continue;
    const double sum = x + y;
    const double tie = tiebreak(x, y);
    if (sum > best.sum + 1e-13 ||
        (sum > best.sum - 1e-13 && tie < best.tie - 1e-15)) {
      best = {x, sum, tie};
    }
  }
  return best;
}

template <typename Partner, typename TieBreak>
double refined_max(double lo, double hi, double resolution, const Partner& partner,
                   const TieBreak& tiebreak) {
  GridBest best = scan(lo, hi, resolution, partner, tiebreak);
  double step = resolution;
  for (int pass = 0; pass < 3; ++pass) {
    const double w = step;
    step /= 64.0;
    best = scan(std::max(lo, best.x - w), std::min(hi, best.x + w), step, partner,
                tiebreak);
  }
  return best.x;
}

}  // namespace

JunctionFluxes lp_junction_oracle(JunctionKind kind, std::span<const double> demands,
                                  std::span<const double> supplies, double alpha,
                                  double beta, double q, double resolution) {
  auto no_tie = [](double, double) { return 0.0; };
  switch (kind) {
    case JunctionKind::OneOne: {
      const double d = demands[0], s = supplies[0];
      auto partner = [&](double x) { return x <= s ? 0.0 : -1.0; };
      const double g = refined_max(0.0, d, resolution, partner, no_tie);
      return {{g}, {g}};
    }
    case JunctionKind::OneTwo: {
      const double d = demands[0], sb = supplies[0], sc = supplies[1];
      auto partner = [&](double x) {
        return (alpha * x <= sb && (1.0 - alpha) * x <= sc) ? 0.0 : -1.0;
      };
      const double ga = refined_max(0.0, d, resolution, partner, no_tie);
      return {{ga}, {alpha * ga, (1.0 - alpha) * ga}};
    }
    case JunctionKind::TwoOne: {
      const double da = demands[0], db = demands[1], sc = supplies[0];
      auto partner = [&](double x) { return std::min(db, sc - x); };
      // Rule (C): among flux-sum maximizers prefer the point nearest the
      // right-of-way line (1-q) ga = q gb.
      auto tie = [&](double x, double y) { return std::abs((1.0 - q) * x - q * y); };
      const double ga = refined_max(0.0, std::min(da, sc), resolution, partner, tie);
      const double gb = partner(ga);
      return {{ga, gb}, {ga + gb}};
    }
    case JunctionKind::TwoTwo: {
      const double da = demands[0], db = demands[1];
      const double sc = supplies[0], sd = supplies[1];
      auto partner = [&](double x) {
        return std::min({db, (sc - alpha * x) / beta,
                         (sd - (1.0 - alpha) * x) / (1.0 - beta)});
      };
      const double cap = std::min({da, sc / alpha, sd / (1.0 - alpha)});
      const double ga = refined_max(0.0, cap, resolution, partner, no_tie);
      const double gb = std::max(0.0, partner(ga));
      return {{ga, gb},
              {alpha * ga + beta * gb, (1.0 - alpha) * ga + (1.0 - beta) * gb}};
    }
  }
  throw std::logic_error("lp_junction_oracle: unknown junction kind");
}

ErrorNorms error_norms(const RoadState& state, const DensityField& exact) {
  const auto rule = gauss_legendre(state.degree() + 2);
  ErrorNorms norms;
  for (int j = 0; j < state.n_cells(); ++j) {
    const double xc = state.mesh().center(j), half = 0.5 * state.mesh().width(j);
    double cell_l1 = 0.0;
    for (std::size_t qi = 0; qi < rule.nodes.size(); ++qi) {
      const double xi = rule.nodes[qi];
      const double err = std::abs(state.evaluate(j, xi) - exact(xc + half * xi));
      cell_l1 += rule.weights[qi] * err;
      norms.linf = std::max(norms.linf, err);
    }
    norms.l1 += half * cell_l1;
    for (double xi : {-1.0, 1.0}) {
      const double err = std::abs(state.evaluate(j, xi) - exact(xc + half * xi));
      norms.linf = std::max(norms.linf, err);
    }
  }
  return norms;
}

NetworkConfig accuracy_config(int degree, int n_cells, bool bp_enabled) {
  NetworkConfig cfg;
  RoadSpec road;
  road.id = "1";
  road.x_min = 0.0;
  road.x_max = 1.0;
  road.cells = n_cells;
  road.flux = {"quadratic", 1.0, 1.0};
  road.initial.kind = InitialSpec::Kind::Sinusoid;
  road.initial.offset = 0.5;
  road.initial.amplitude = 0.5;
  road.initial.frequency = 2.0;
  cfg.roads.push_back(road);
  cfg.boundaries.push_back({"1", RoadEnd::Left, BoundaryKind::Periodic, 0.0});
  cfg.boundaries.push_back({"1", RoadEnd::Right, BoundaryKind::Periodic, 0.0});
  cfg.solver.degree = degree;
  cfg.solver.t_end = 0.1;
  cfg.solver.output_times = {0.1};
  cfg.solver.tvb_enabled = false;
  cfg.solver.bp_enabled = bp_enabled;
  // Piecewise constants run as a plain monotone finite-volume scheme.
  if (degree == 0) cfg.solver.flux_kind = NumericalFlux::Godunov;
  if (bp_enabled && degree >= 2) cfg.solver.cfl = 0.05;
  return cfg;
}

ErrorReport convergence_study(int degree, std::span<const int> meshes, bool bp_enabled) {
  ErrorReport report;
  report.degree = degree;
  report.bp = bp_enabled;
  for (int n : meshes) {
    const RunResult result = run_network(accuracy_config(degree, n, bp_enabled));
    const ErrorNorms norms = error_norms(
        result.final_state.roads[0], [](double x) { return exact_smooth_solution(x, 0.1); });
    ErrorRow row;
    row.n_cells = n;
    row.l1 = norms.l1;
    row.linf = norms.linf;
    row.min_val = result.summary.min_density;
    row.max_val = result.summary.max_density;
    report.rows.push_back(row);
  }
  compute_orders(report);
  return report;
}

void compute_orders(ErrorReport& report) {
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& prev = report.rows[i - 1];
    auto& row = report.rows[i];
    const double ratio = std::log2(static_cast<double>(row.n_cells) / prev.n_cells);
    row.l1_order = std::log2(prev.l1 / row.l1) / ratio;
    row.linf_order = std::log2(prev.linf / row.linf) / ratio;
  }
}

std::string format_error_report(const ErrorReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "P%d, bound-preserving limiter %s\n",
                report.degree, report.bp ? "on" : "off");
  out << line;
  out << "    N     L1 error   order   Linf error   order        min        max\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    char o1[16] = "   --", o2[16] = "   --";
    if (i > 0) {
      std::snprintf(o1, sizeof(o1), "%5.2f", r.l1_order);
      std::snprintf(o2, sizeof(o2), "%5.2f", r.linf_order);
    }
    std::snprintf(line, sizeof(line), "%5d   %10.2e   %s   %10.2e   %s   %9.6f  %9.6f\n",
                  r.n_cells, r.l1, o1, r.linf, o2, r.min_val, r.max_val);
    out << line;
  }
  return out.str();
}

std::string error_report_csv(const ErrorReport& report) {
  std::ostringstream out;
  out << "degree,bp,N,l1_error,l1_order,linf_error,linf_order,min,max\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    char line[256];
    std::snprintf(line, sizeof(line), "%d,%d,%d,%.12e,%.4f,%.12e,%.4f,%.12f,%.12f\n",
                  report.degree, report.bp ? 1 : 0, r.n_cells, r.l1,
                  i > 0 ? r.l1_order : 0.0, r.linf, i > 0 ? r.linf_order : 0.0,
                  r.min_val, r.max_val);
    out << line;
  }
  return out.str();
}

RunResult reference_run(NetworkConfig cfg, int cells_per_road) {
  for (auto& road : cfg.roads) {
    road.cells = cells_per_road;
    road.degree.reset();
  }
  cfg.solver.degree = 0;
  cfg.solver.flux_kind = NumericalFlux::Godunov;
  cfg.solver.cfl = 0.5;
  cfg.solver.tvb_enabled = false;
  cfg.solver.bp_enabled = false;
  return run_network(cfg);
}

double l1_vs_reference(const RoadState& coarse, const RoadState& fine) {
  const int nc = coarse.n_cells(), nf = fine.n_cells();
  if (nf % nc != 0)
    throw std::invalid_argument("l1_vs_reference: fine mesh must refine the coarse one");
  const int block = nf / nc;
  double l1 = 0.0;
  for (int j = 0; j < nc; ++j) {
    double agg = 0.0;
    for (int i = 0; i < block; ++i) agg += fine.average(j * block + i);
    agg /= block;
    l1 += std::abs(coarse.average(j) - agg) * coarse.mesh().width(j);
  }
  return l1;
}

double jam_threshold(const FluxModel& upstream, const FluxModel& downstream) {
  const double cap = downstream.max_flux();
  if (cap >= upstream.max_flux()) return upstream.sigma();
  double lo = 0.0, hi = upstream.sigma();
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (upstream.flux(mid) < cap) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace lwrdg
