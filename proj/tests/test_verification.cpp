#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "lwrdg/presets.hpp"
#include "lwrdg/verification.hpp"

using namespace lwrdg;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double initial_profile(double x) { return 0.5 + 0.5 * std::sin(two_pi * x); }

// Characteristic tracing: bracket the foot point x0 with x0 + (1-2*rho0(x0)) t = x
// (monotone in x0 for pre-shock t) and return rho0(x0).
double traced_solution(double x, double t) {
  auto shifted = [&](double x0) { return x0 + (1.0 - 2.0 * initial_profile(x0)) * t - x; };
  double lo = x - 2.0, hi = x + 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (shifted(mid) < 0.0 ? lo : hi) = mid;
  }
  return initial_profile(0.5 * (lo + hi));
}

}  // namespace

TEST_SUITE("verification") {

TEST_CASE("exact solution: initial time and stationary characteristics") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    CHECK(exact_smooth_solution(x, 0.0) == doctest::Approx(initial_profile(x)).epsilon(1e-13));
  }
  // Where the profile crosses 1/2 the characteristic speed vanishes.
  CHECK(exact_smooth_solution(0.0, 0.1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(exact_smooth_solution(0.5, 0.1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("exact solution agrees with characteristic tracing") {
  CHECK(exact_smooth_solution(0.3, 0.1) ==
        doctest::Approx(traced_solution(0.3, 0.1)).epsilon(1e-12));
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> xd(0.0, 1.0), td(0.0, 0.12);
  for (int i = 0; i < 10000; ++i) {
    const double x = xd(rng), t = td(rng);
    const double rho = exact_smooth_solution(x, t);
    // Implicit characteristic equation residual.
    CHECK(std::abs(rho - 0.5 - 0.5 * std::sin(two_pi * (x - (1.0 - 2.0 * rho) * t))) <= 1e-13);
  }
  for (int i = 0; i < 200; ++i) {
    const double x = xd(rng), t = td(rng);
    CHECK(std::abs(exact_smooth_solution(x, t) - traced_solution(x, t)) <= 1e-10);
  }
}

TEST_CASE("exact solution refuses post-shock queries") {
  // The profile steepens into a shock around t = 1/(2 pi); past it the
  // characteristic equation has multiple roots and Newton stalls.
  CHECK_THROWS_AS((void)exact_smooth_solution(0.02, 0.2), std::runtime_error);
}

TEST_CASE("order computation recovers a synthetic rate") {
  ErrorReport report;
  report.degree = 1;
  const double p = 2.37, c = 0.8;
  for (int n : {10, 20, 40, 80}) {
    ErrorRow row;
    row.n_cells = n;
    row.l1 = c * std::pow(n, -p);
    row.linf = 3.0 * c * std::pow(n, -p);
    report.rows.push_back(row);
  }
  compute_orders(report);
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    CHECK(report.rows[i].l1_order == doctest::Approx(p).epsilon(1e-12));
    CHECK(report.rows[i].linf_order == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("error norms vanish against the state itself") {
  const RoadState s = project_initial(Mesh1D(0.0, 1.0, 5), 1, [](double) { return 0.3; });
  const ErrorNorms norms = error_norms(s, [](double) { return 0.3; });
  CHECK(norms.l1 <= 1e-15);
  CHECK(norms.linf <= 1e-15);
}

TEST_CASE("smooth-problem errors sit near the published magnitudes") {
  const int meshes[] = {160, 320};
  const ErrorReport report = convergence_study(1, meshes, false);
  // Published value 0.38e-5 at N=320; the integration here is a plain
  // Gauss-quadrature L1 so only the magnitude band is asserted.
  CHECK(report.rows[1].l1 >= 0.38e-5 / 3.0);
  CHECK(report.rows[1].l1 <= 0.38e-5 * 3.0);
  CHECK(report.rows[1].l1_order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("bound limiter preserves the design order at the finest meshes") {
  const int meshes[] = {160, 320};
  const ErrorReport p2 = convergence_study(2, meshes, true);
  CHECK(p2.rows[1].l1_order >= 3.0 - 0.3);
  CHECK(p2.rows[1].l1_order <= 3.0 + 0.3);
  const ErrorReport p3 = convergence_study(3, meshes, true);
  CHECK(p3.rows[1].l1_order >= 4.0 - 0.3);
  CHECK(p3.rows[1].l1_order <= 4.0 + 0.3);
}

TEST_CASE("oracle optimum is stable under grid refinement") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> flux(0.0, 0.25);
  for (int i = 0; i < 50; ++i) {
    const double d[2] = {flux(rng), flux(rng)};
    const double s[2] = {flux(rng), flux(rng)};
    const auto coarse = lp_junction_oracle(JunctionKind::TwoTwo, d, s, 0.4, 0.3, 0.0, 1e-3);
    const auto fine = lp_junction_oracle(JunctionKind::TwoTwo, d, s, 0.4, 0.3, 0.0, 5e-4);
    CHECK(std::abs(coarse.gamma_in[0] - fine.gamma_in[0]) <= 1e-3);
    CHECK(std::abs(coarse.gamma_in[1] - fine.gamma_in[1]) <= 1e-3);
  }
}

TEST_CASE("jam threshold of the bottleneck pair") {
  const FluxModel wide = FluxModel::quadratic(1.0, 1.0);
  const FluxModel narrow = FluxModel::quadratic(2.0 / 3.0, 1.0);
  const double analytic = 0.5 * (1.0 - std::sqrt(1.0 / 3.0));
  CHECK(jam_threshold(wide, narrow) == doctest::Approx(analytic).epsilon(1e-10));
  CHECK(jam_threshold(wide, narrow) == doctest::Approx(0.2113).epsilon(1e-3));
}

TEST_CASE("reference aggregation") {
  const RoadState fine = project_initial(Mesh1D(0.0, 1.0, 40), 0,
                                         [](double x) { return 0.2 + 0.1 * x; });
  const RoadState coarse = project_initial(Mesh1D(0.0, 1.0, 10), 0,
                                           [](double x) { return 0.2 + 0.1 * x; });
  CHECK(l1_vs_reference(coarse, fine) <= 1e-13);

  RoadState off = coarse;
  for (int j = 0; j < off.n_cells(); ++j) off.mode(j, 0) += 0.01;
  CHECK(l1_vs_reference(off, fine) == doctest::Approx(0.01).epsilon(1e-10));
}

TEST_CASE("reference run is a refined first-order solve") {
  NetworkConfig cfg = build_preset("two-one");
  cfg.solver.t_end = 0.1;
  cfg.solver.output_times = {0.1};
  const RunResult ref = reference_run(cfg, 160);
  CHECK(ref.final_state.roads[0].n_cells() == 160);
  CHECK(ref.final_state.roads[0].degree() == 0);
  CHECK(ref.summary.conservation_residual <= 1e-10);
}

}  // TEST_SUITE
