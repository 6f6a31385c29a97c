#pragma once

#include <string>
#include <vector>

#include "lwrdg/flux_model.hpp"

namespace lwrdg {

enum class JunctionKind { OneOne, OneTwo, TwoOne, TwoTwo };

/// Junction topology plus distribution / right-of-way parameters.
/// Incoming roads attach by their right end, outgoing roads by their left end.
struct JunctionSpec {
  JunctionKind kind = JunctionKind::OneOne;
  std::vector<std::string> incoming;
  std::vector<std::string> outgoing;
  // OneTwo: fraction of the incoming flux routed to outgoing[0].
  // TwoTwo: alpha, beta are the turning fractions of incoming[0], incoming[1]
  // toward outgoing[0]; alpha != beta.
  double alpha = 0.0;
  double beta = 0.0;
  // TwoOne: share of a constrained outgoing capacity granted to incoming[0].
  double q = 0.0;
};

/// Fluxes assigned to the road ends meeting at one junction.
/// sum(gamma_in) == sum(gamma_out) up to roundoff.
struct JunctionFluxes {
  std::vector<double> gamma_in;
  std::vector<double> gamma_out;
  double total_in() const;
  double total_out() const;
};

// Closed-form solvers. Inputs are the demands of the incoming roads and the
// supplies of the outgoing roads; negative inputs raise std::domain_error,
// out-of-range parameters raise config_error.
JunctionFluxes solve_one_one(double demand_a, double supply_b);
JunctionFluxes solve_one_two(double demand_a, double supply_b, double supply_c,
                             double alpha);
JunctionFluxes solve_two_one(double demand_a, double demand_b, double supply_c,
                             double q);
JunctionFluxes solve_two_two(double demand_a, double demand_b, double supply_c,
                             double supply_d, double alpha, double beta);

/// Dispatches on spec.kind; demands/supplies ordered as spec.incoming/outgoing.
JunctionFluxes solve_junction(const JunctionSpec& spec,
                              const std::vector<double>& demands,
                              const std::vector<double>& supplies);

enum class TraceSide { Incoming, Outgoing };

/// Unique admissible boundary density with f(rho_hat) = gamma_hat for a road
/// whose pre-junction state is rho0. Incoming ends select the congested branch
/// unless gamma_hat equals f(rho0) in free flow (no wave); outgoing ends are
/// mirror-symmetric. Diagnostic; the scheme itself works in flux space.
double reconstruct_trace_density(const FluxModel& model, double rho0,
                                 double gamma_hat, TraceSide side);

}  // namespace lwrdg
