#include "lwrdg/junction.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "lwrdg/errors.hpp"

namespace lwrdg {

namespace {

void require_nonnegative(std::initializer_list<double> values, const char* op) {
  for (double v : values)
    if (!(v >= 0.0)) throw std::domain_error(std::string(op) + ": negative demand/supply");
}

void require_fraction(double v, const char* name) {
  if (!(v > 0.0) || !(v < 1.0))
    throw config_error(std::string(name) + " must lie strictly between 0 and 1");
}

}  // namespace

double JunctionFluxes::total_in() const {
  double s = 0.0;
  for (double g : gamma_in) s += g;
  return s;
}

double JunctionFluxes::total_out() const {
  double s = 0.0;
  for (double g : gamma_out) s += g;
  return s;
}

JunctionFluxes solve_one_one(double demand_a, double supply_b) {
  require_nonnegative({demand_a, supply_b}, "solve_one_one");
  const double g = std::min(demand_a, supply_b);
  return {{g}, {g}};
}

JunctionFluxes solve_one_two(double demand_a, double supply_b, double supply_c,
                             double alpha) {
  require_nonnegative({demand_a, supply_b, supply_c}, "solve_one_two");
  require_fraction(alpha, "alpha");
  const double ga = std::min({demand_a, supply_b / alpha, supply_c / (1.0 - alpha)});
  return {{ga}, {alpha * ga, (1.0 - alpha) * ga}};
}

JunctionFluxes solve_two_one(double demand_a, double demand_b, double supply_c,
                             double q) {
  require_nonnegative({demand_a, demand_b, supply_c}, "solve_two_one");
  require_fraction(q, "q");
  if (demand_a + demand_b <= supply_c)
    return {{demand_a, demand_b}, {demand_a + demand_b}};

  // Capacity binds. Start from the right-of-way split and project onto the
  // feasible segment of the capacity line when a demand cuts it off.
  assert(demand_a + demand_b >= supply_c);
  double ga = q * supply_c;
  double gb = (1.0 - q) * supply_c;
  if (demand_a < ga) {
    ga = demand_a;
    gb = supply_c - demand_a;
  } else if (demand_b < gb) {
    gb = demand_b;
    ga = supply_c - demand_b;
  }
  return {{ga, gb}, {ga + gb}};
}

JunctionFluxes solve_two_two(double demand_a, double demand_b, double supply_c,
                             double supply_d, double alpha, double beta) {
  require_nonnegative({demand_a, demand_b, supply_c, supply_d}, "solve_two_two");
  require_fraction(alpha, "alpha");
  require_fraction(beta, "beta");
  if (alpha == beta)
    throw config_error("solve_two_two: alpha and beta must differ");

  // Intersection of the two supply constraint lines.
  const double det = alpha - beta;
  const double p1 = ((1.0 - beta) * supply_c - beta * supply_d) / det;
  const double p2 = (alpha * supply_d - (1.0 - alpha) * supply_c) / det;

  double ga, gb;
  if (p1 <= demand_a && p2 <= demand_b) {  // both supply constraints active
    ga = p1;
    gb = p2;
  } else if (p1 > demand_a && p2 > demand_b) {  // both demands active
    ga = demand_a;
    gb = demand_b;
  } else if (p1 > demand_a) {  // demand a active, tighter supply caps b
    ga = demand_a;
    gb = alpha < beta
             ? std::min((supply_c - alpha * demand_a) / beta, demand_b)
             : std::min((supply_d - (1.0 - alpha) * demand_a) / (1.0 - beta), demand_b);
  } else {  // demand b active, tighter supply caps a
    gb = demand_b;
    ga = alpha > beta
             ? std::min((supply_c - beta * demand_b) / alpha, demand_a)
             : std::min((supply_d - (1.0 - beta) * demand_b) / (1.0 - alpha), demand_a);
  }

  if (ga < 0.0 || gb < 0.0) {
    // Degenerate corner: the case formulas left the first quadrant. The
    // objective ga + gb is concave piecewise linear along the feasible upper
    // boundary, so the optimum sits at one of its breakpoints.
    const double ga_cap =
        std::min({demand_a, supply_c / alpha, supply_d / (1.0 - alpha)});
    auto best_b = [&](double x) {
      return std::max(0.0, std::min({demand_b, (supply_c - alpha * x) / beta,
                                     (supply_d - (1.0 - alpha) * x) / (1.0 - beta)}));
    };
    const double breakpoints[] = {
        0.0, ga_cap, std::clamp(p1, 0.0, ga_cap),
        std::clamp((supply_c - beta * demand_b) / alpha, 0.0, ga_cap),
        std::clamp((supply_d - (1.0 - beta) * demand_b) / (1.0 - alpha), 0.0, ga_cap)};
    ga = 0.0;
    gb = best_b(0.0);
    for (double x : breakpoints) {
      const double y = best_b(x);
      if (x + y > ga + gb) {
        ga = x;
        gb = y;
      }
    }
  }

  return {{ga, gb},
          {alpha * ga + beta * gb, (1.0 - alpha) * ga + (1.0 - beta) * gb}};
}

JunctionFluxes solve_junction(const JunctionSpec& spec,
                              const std::vector<double>& demands,
                              const std::vector<double>& supplies) {
  switch (spec.kind) {
    case JunctionKind::OneOne:
      return solve_one_one(demands[0], supplies[0]);
    case JunctionKind::OneTwo:
      return solve_one_two(demands[0], supplies[0], supplies[1], spec.alpha);
    case JunctionKind::TwoOne:
      return solve_two_one(demands[0], demands[1], supplies[0], spec.q);
    case JunctionKind::TwoTwo:
      return solve_two_two(demands[0], demands[1], supplies[0], supplies[1],
                           spec.alpha, spec.beta);
  }
  throw std::logic_error("solve_junction: unknown junction kind");
}

double reconstruct_trace_density(const FluxModel& model, double rho0,
                                 double gamma_hat, TraceSide side) {
  const double rho_max = model.rho_max();
  const double sigma = model.sigma();
  if (!(rho0 >= 0.0) || !(rho0 <= rho_max))
    throw std::domain_error("reconstruct_trace_density: rho0 outside [0, rho_max]");
  const double cap =
      side == TraceSide::Incoming ? model.demand(rho0) : model.supply(rho0);
  if (!(gamma_hat >= 0.0) || gamma_hat > cap + 1e-12)
    throw std::domain_error("reconstruct_trace_density: gamma_hat above the admissible cap");
  const double g = std::min(gamma_hat, model.max_flux());

  const double f0 = model.flux(rho0);
  if (side == TraceSide::Incoming) {
    if (rho0 <= sigma && std::abs(g - f0) <= 1e-12 * std::max(1.0, std::abs(f0)))
      return rho0;  // no wave
    // Congested branch: f decreasing on [sigma, rho_max].
    double lo = sigma, hi = rho_max;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (model.flux(mid) > g) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  }
  if (rho0 >= sigma && std::abs(g - f0) <= 1e-12 * std::max(1.0, std::abs(f0)))
    return rho0;
  // Free branch: f increasing on [0, sigma].
  double lo = 0.0, hi = sigma;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (model.flux(mid) < g) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace lwrdg
