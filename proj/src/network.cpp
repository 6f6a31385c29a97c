#include "lwrdg/network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lwrdg/errors.hpp"
#include "lwrdg/quadrature.hpp"

namespace lwrdg {

FluxModel FluxSpec::build() const {
  if (model == "quadratic") return FluxModel::quadratic(rho_max, v_free);
  if (model == "bottleneck-narrow") return FluxModel::quadratic(2.0 / 3.0, 1.0);
  throw config_error("unknown flux model \"" + model + "\"");
}

double InitialSpec::operator()(double x) const {
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::Sinusoid:
      return offset + amplitude * std::sin(frequency * std::numbers::pi * x);
    case Kind::Piecewise:
      for (const auto& p : pieces)
        if (x >= p.from && x <= p.to) return p.value;
      return otherwise;
  }
  return value;
}

double InitialSpec::lower_bound() const {
  switch (kind) {
    case Kind::Constant: return value;
    case Kind::Sinusoid: return offset - std::abs(amplitude);
    case Kind::Piecewise: {
      double lo = otherwise;
      for (const auto& p : pieces) lo = std::min(lo, p.value);
      return lo;
    }
  }
  return value;
}

double InitialSpec::upper_bound() const {
  switch (kind) {
    case Kind::Constant: return value;
    case Kind::Sinusoid: return offset + std::abs(amplitude);
    case Kind::Piecewise: {
      double hi = otherwise;
      for (const auto& p : pieces) hi = std::max(hi, p.value);
      return hi;
    }
  }
  return value;
}

Network::Network(NetworkConfig cfg) : cfg_(std::move(cfg)) { validate_and_resolve(); }

int Network::road_index(const std::string& id) const {
  for (int i = 0; i < n_roads(); ++i)
    if (cfg_.roads[i].id == id) return i;
  return -1;
}

void Network::validate_and_resolve() {
  if (cfg_.roads.empty()) throw config_error("roads: at least one road is required");

  for (int i = 0; i < n_roads(); ++i) {
    const auto& r = cfg_.roads[i];
    if (r.id.empty()) throw config_error("roads: every road needs an id");
    for (int j = 0; j < i; ++j)
      if (cfg_.roads[j].id == r.id)
        throw config_error("roads: duplicate id \"" + r.id + "\"");
    if (!(r.x_max > r.x_min))
      throw config_error("road \"" + r.id + "\": x_max must exceed x_min");
    if (r.cells < 1) throw config_error("road \"" + r.id + "\": cells must be >= 1");
    models_.push_back(r.flux.build());
    const int deg = r.degree.value_or(cfg_.solver.degree);
    if (deg < 0 || deg > kMaxDegree)
      throw config_error("road \"" + r.id + "\": degree must be in [0, 3]");
    degrees_.push_back(deg);
    const double rho_max = models_.back().rho_max();
    if (r.initial.lower_bound() < -1e-12 || r.initial.upper_bound() > rho_max + 1e-12)
      throw config_error("road \"" + r.id + "\": initial density outside [0, " +
                         std::to_string(rho_max) + "]");
  }

  if (cfg_.solver.degree < 0 || cfg_.solver.degree > kMaxDegree)
    throw config_error("solver.degree must be in [0, 3]");
  if (cfg_.solver.cfl && !(*cfg_.solver.cfl > 0.0))
    throw config_error("solver.cfl must be positive");
  if (!(cfg_.solver.t_end > 0.0)) throw config_error("solver.t_end must be positive");
  if (cfg_.solver.tvb_m < 0.0) throw config_error("solver.tvb_m must be nonnegative");
  if (cfg_.solver.samples_per_cell < 1)
    throw config_error("solver.samples_per_cell must be >= 1");

  auto& times = cfg_.solver.output_times;
  if (times.empty()) times.push_back(cfg_.solver.t_end);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  for (double t : times)
    if (!(t > 0.0) || t > cfg_.solver.t_end + 1e-12)
      throw config_error("solver.output_times must lie in (0, t_end]");

  // Road-end attachments: exactly one junction slot or boundary per end.
  left_att_.assign(n_roads(), {});
  right_att_.assign(n_roads(), {});
  std::vector<int> left_count(n_roads(), 0), right_count(n_roads(), 0);

  for (std::size_t jn = 0; jn < cfg_.junctions.size(); ++jn) {
    auto& spec = cfg_.junctions[jn];
    const std::size_t n_in = spec.incoming.size(), n_out = spec.outgoing.size();
    if (n_in == 1 && n_out == 1) spec.kind = JunctionKind::OneOne;
    else if (n_in == 1 && n_out == 2) spec.kind = JunctionKind::OneTwo;
    else if (n_in == 2 && n_out == 1) spec.kind = JunctionKind::TwoOne;
    else if (n_in == 2 && n_out == 2) spec.kind = JunctionKind::TwoTwo;
    else
      throw config_error("junctions[" + std::to_string(jn) +
                         "]: only 1x1, 1x2, 2x1 and 2x2 junctions are supported");
    if (spec.kind == JunctionKind::OneTwo || spec.kind == JunctionKind::TwoTwo) {
      if (!(spec.alpha > 0.0) || !(spec.alpha < 1.0))
        throw config_error("junctions[" + std::to_string(jn) + "].alpha must be in (0, 1)");
    }
    if (spec.kind == JunctionKind::TwoTwo) {
      if (!(spec.beta > 0.0) || !(spec.beta < 1.0))
        throw config_error("junctions[" + std::to_string(jn) + "].beta must be in (0, 1)");
      if (spec.alpha == spec.beta)
        throw config_error("junctions[" + std::to_string(jn) +
                           "]: alpha and beta must differ");
    }
    if (spec.kind == JunctionKind::TwoOne && (!(spec.q > 0.0) || !(spec.q < 1.0)))
      throw config_error("junctions[" + std::to_string(jn) + "].q must be in (0, 1)");

    ResolvedJunction rj;
    rj.spec = spec;
    for (std::size_t s = 0; s < n_in; ++s) {
      const int r = road_index(spec.incoming[s]);
      if (r < 0)
        throw config_error("junctions[" + std::to_string(jn) + "]: unknown road \"" +
                           spec.incoming[s] + "\"");
      rj.in_roads.push_back(r);
      right_att_[r] = {Attachment::Type::Junction, static_cast<int>(jn),
                       static_cast<int>(s), 0.0};
      ++right_count[r];
    }
    for (std::size_t s = 0; s < n_out; ++s) {
      const int r = road_index(spec.outgoing[s]);
      if (r < 0)
        throw config_error("junctions[" + std::to_string(jn) + "]: unknown road \"" +
                           spec.outgoing[s] + "\"");
      rj.out_roads.push_back(r);
      left_att_[r] = {Attachment::Type::Junction, static_cast<int>(jn),
                      static_cast<int>(s), 0.0};
      ++left_count[r];
    }
    junctions_.push_back(std::move(rj));
  }

  for (std::size_t b = 0; b < cfg_.boundaries.size(); ++b) {
    const auto& spec = cfg_.boundaries[b];
    const int r = road_index(spec.road);
    if (r < 0)
      throw config_error("boundaries[" + std::to_string(b) + "]: unknown road \"" +
                         spec.road + "\"");
    Attachment att;
    switch (spec.kind) {
      case BoundaryKind::Inflow:
        att.type = Attachment::Type::Inflow;
        if (!(spec.value >= 0.0) || spec.value > models_[r].rho_max())
          throw config_error("boundaries[" + std::to_string(b) +
                             "]: inflow density outside [0, rho_max] of road \"" +
                             spec.road + "\"");
        att.inflow_value = spec.value;
        break;
      case BoundaryKind::Outflow: att.type = Attachment::Type::Outflow; break;
      case BoundaryKind::Periodic: att.type = Attachment::Type::Periodic; break;
    }
    if (spec.end == RoadEnd::Left) {
      left_att_[r] = att;
      ++left_count[r];
    } else {
      right_att_[r] = att;
      ++right_count[r];
    }
  }

  for (int r = 0; r < n_roads(); ++r) {
    const std::string& id = cfg_.roads[r].id;
    if (left_count[r] != 1)
      throw config_error("road \"" + id + "\": left end needs exactly one junction or boundary (got " +
                         std::to_string(left_count[r]) + ")");
    if (right_count[r] != 1)
      throw config_error("road \"" + id + "\": right end needs exactly one junction or boundary (got " +
                         std::to_string(right_count[r]) + ")");
    const bool lp = left_att_[r].type == Attachment::Type::Periodic;
    const bool rp = right_att_[r].type == Attachment::Type::Periodic;
    if (lp != rp)
      throw config_error("road \"" + id + "\": periodic boundaries must pair both ends");
  }
}

NetworkState Network::initial_state() const {
  NetworkState state;
  state.roads.reserve(n_roads());
  for (int r = 0; r < n_roads(); ++r) {
    Mesh1D mesh(cfg_.roads[r].x_min, cfg_.roads[r].x_max, cfg_.roads[r].cells);
    const auto& init = cfg_.roads[r].initial;
    state.roads.push_back(project_initial(mesh, degrees_[r],
                                          [&init](double x) { return init(x); }));
  }
  apply_limiters(state);
  return state;
}

double Network::compute_dt(const NetworkState& state) const {
  double dt = std::numeric_limits<double>::infinity();
  for (int r = 0; r < n_roads(); ++r) {
    const int k = degrees_[r];
    const double dx = state.roads[r].mesh().min_width();
    const double cfl = cfg_.solver.cfl.value_or(cfg_.solver.cfl_table[k]);
    double cand = k <= 2 ? cfl * dx : cfl * std::pow(dx, 4.0 / 3.0);
    if (cfg_.solver.bp_enabled)
      cand = std::min(cand, min_lobatto_weight(k) * dx / models_[r].lf_alpha());
    dt = std::min(dt, cand);
  }
  // Land exactly on the next output time and on t_end.
  const double t = state.time;
  double horizon = cfg_.solver.t_end;
  for (double tout : cfg_.solver.output_times) {
    if (tout > t + 1e-14 * std::max(1.0, tout)) {
      horizon = tout;
      break;
    }
  }
  dt = std::min(dt, horizon - t);
  if (!(dt > 0.0)) throw integrity_error("compute_dt: nonpositive time step");
  return dt;
}

Network::EndFluxes Network::stage_boundary_fluxes(const NetworkState& state) const {
  EndFluxes ef;
  ef.left.assign(n_roads(), 0.0);
  ef.right.assign(n_roads(), 0.0);

  auto junction_trace = [&](int road, bool incoming) {
    const auto& rs = state.roads[road];
    const double tr = incoming ? rs.trace_right(rs.n_cells() - 1) : rs.trace_left(0);
    const double rho_max = models_[road].rho_max();
    if (!std::isfinite(tr) || tr < -1e-10 || tr > rho_max + 1e-10) {
      std::ostringstream msg;
      msg << "junction coupling: road \"" << cfg_.roads[road].id << "\" trace " << tr
          << " outside [0, " << rho_max << "] at t=" << state.time
          << "; check limiter configuration";
      throw integrity_error(msg.str());
    }
    return std::clamp(tr, 0.0, rho_max);
  };

  for (const auto& jn : junctions_) {
    std::vector<double> demands, supplies;
    demands.reserve(jn.in_roads.size());
    supplies.reserve(jn.out_roads.size());
    for (int r : jn.in_roads) demands.push_back(models_[r].demand(junction_trace(r, true)));
    for (int r : jn.out_roads) supplies.push_back(models_[r].supply(junction_trace(r, false)));
    const JunctionFluxes fluxes = solve_junction(jn.spec, demands, supplies);
    for (std::size_t s = 0; s < jn.in_roads.size(); ++s)
      ef.right[jn.in_roads[s]] = fluxes.gamma_in[s];
    for (std::size_t s = 0; s < jn.out_roads.size(); ++s)
      ef.left[jn.out_roads[s]] = fluxes.gamma_out[s];
  }

  const auto flux_kind = cfg_.solver.flux_kind;
  for (int r = 0; r < n_roads(); ++r) {
    const auto& rs = state.roads[r];
    const auto& m = models_[r];
    const double tl = rs.trace_left(0);
    const double tr = rs.trace_right(rs.n_cells() - 1);
    switch (left_att_[r].type) {
      case Attachment::Type::Inflow:
        ef.left[r] = m.interface_flux(flux_kind, left_att_[r].inflow_value, tl);
        break;
      case Attachment::Type::Outflow:
        ef.left[r] = m.flux(tl);  // zero-order extrapolated ghost
        break;
      case Attachment::Type::Periodic:
        ef.left[r] = m.interface_flux(flux_kind, tr, tl);
        break;
      case Attachment::Type::Junction: break;
    }
    switch (right_att_[r].type) {
      case Attachment::Type::Inflow:
        ef.right[r] = m.interface_flux(flux_kind, tr, right_att_[r].inflow_value);
        break;
      case Attachment::Type::Outflow:
        ef.right[r] = m.flux(tr);
        break;
      case Attachment::Type::Periodic:
        ef.right[r] = ef.left[r];
        break;
      case Attachment::Type::Junction: break;
    }
  }
  return ef;
}

void Network::apply_limiters(NetworkState& state) const {
  for (int r = 0; r < n_roads(); ++r) {
    if (cfg_.solver.tvb_enabled)
      apply_tvb(state.roads[r], {cfg_.solver.tvb_m, true});
    if (cfg_.solver.bp_enabled)
      apply_bp(state.roads[r], {0.0, models_[r].rho_max(), true});
  }
}

void Network::check_finite(const NetworkState& state) const {
  for (int r = 0; r < n_roads(); ++r) {
    const auto coeffs = state.roads[r].coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!std::isfinite(coeffs[i])) {
        std::ostringstream msg;
        msg << "non-finite coefficient on road \"" << cfg_.roads[r].id << "\" cell "
            << i / (state.roads[r].degree() + 1) << " at t=" << state.time;
        throw integrity_error(msg.str());
      }
    }
  }
}

void Network::rk3_step(NetworkState& state, double dt, RunSummary* summary) const {
  // Butcher weights of the three forward-Euler stage evaluations.
  static constexpr double kWeights[3] = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};

  auto stage_residuals = [&](const NetworkState& s, int stage_idx) {
    const EndFluxes ef = stage_boundary_fluxes(s);
    if (summary) {
      double net = 0.0;
      for (int r = 0; r < n_roads(); ++r) {
        const auto lt = left_att_[r].type, rt = right_att_[r].type;
        if (lt == Attachment::Type::Inflow || lt == Attachment::Type::Outflow)
          net += ef.left[r];
        if (rt == Attachment::Type::Inflow || rt == Attachment::Type::Outflow)
          net -= ef.right[r];
      }
      summary->boundary_flux_integral += dt * kWeights[stage_idx] * net;
    }
    std::vector<RoadResidual> res;
    res.reserve(n_roads());
    for (int r = 0; r < n_roads(); ++r)
      res.push_back(dg_residual(s.roads[r], models_[r], cfg_.solver.flux_kind,
                                ef.left[r], ef.right[r]));
    return res;
  };

  const NetworkState& u0 = state;
  NetworkState u1 = u0;

  auto res = stage_residuals(u0, 0);
  for (int r = 0; r < n_roads(); ++r) {
    auto c = u1.roads[r].coeffs();
    const auto c0 = u0.roads[r].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c0[i] + dt * res[r].coeffs[i];
  }
  apply_limiters(u1);
  u1.time = u0.time + dt;
  check_finite(u1);

  NetworkState u2 = u1;
  res = stage_residuals(u1, 1);
  for (int r = 0; r < n_roads(); ++r) {
    auto c = u2.roads[r].coeffs();
    const auto c0 = u0.roads[r].coeffs();
    const auto c1 = u1.roads[r].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = 0.75 * c0[i] + 0.25 * c1[i] + 0.25 * dt * res[r].coeffs[i];
  }
  apply_limiters(u2);
  u2.time = u0.time + 0.5 * dt;
  check_finite(u2);

  res = stage_residuals(u2, 2);
  NetworkState out = u2;
  for (int r = 0; r < n_roads(); ++r) {
    auto c = out.roads[r].coeffs();
    const auto c0 = u0.roads[r].coeffs();
    const auto c2 = u2.roads[r].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = c0[i] / 3.0 + 2.0 / 3.0 * c2[i] + 2.0 / 3.0 * dt * res[r].coeffs[i];
  }
  apply_limiters(out);
  out.time = u0.time + dt;
  out.step = u0.step + 1;
  check_finite(out);
  state = std::move(out);
}

double Network::total_mass(const NetworkState& state) const {
  double mass = 0.0;
  for (const auto& rs : state.roads)
    for (int j = 0; j < rs.n_cells(); ++j) mass += rs.average(j) * rs.mesh().width(j);
  return mass;
}

void Network::track_extremes(const NetworkState& state, RunSummary& summary) const {
  for (int r = 0; r < n_roads(); ++r) {
    const auto& rs = state.roads[r];
    const auto rule = gauss_lobatto(lobatto_points_for_degree(rs.degree()));
    for (int j = 0; j < rs.n_cells(); ++j) {
      for (double xi : rule.nodes) {
        const double v = rs.evaluate(j, xi);
        summary.min_density = std::min(summary.min_density, v);
        summary.max_density = std::max(summary.max_density, v);
      }
    }
  }
}

RunResult Network::run(const StepObserver& observer) const {
  RunResult result;
  NetworkState state = initial_state();
  result.summary.mass_initial = total_mass(state);
  track_extremes(state, result.summary);
  if (observer) observer(state);

  const double t_end = cfg_.solver.t_end;
  const double t_tol = 1e-12 * std::max(1.0, t_end);
  std::size_t next_output = 0;

  while (state.time < t_end - t_tol) {
    const double dt = compute_dt(state);
    rk3_step(state, dt, &result.summary);
    result.summary.n_steps += 1;
    result.summary.dt_min = std::min(result.summary.dt_min, dt);
    result.summary.dt_max = std::max(result.summary.dt_max, dt);
    auto& hist = result.summary.dt_history;
    if (!hist.empty() && hist.back().first == dt) ++hist.back().second;
    else hist.emplace_back(dt, 1);
    track_extremes(state, result.summary);
    if (observer) observer(state);
    while (next_output < cfg_.solver.output_times.size() &&
           state.time >= cfg_.solver.output_times[next_output] - t_tol) {
      result.snapshots.push_back({cfg_.solver.output_times[next_output], state});
      ++next_output;
    }
  }

  result.summary.mass_final = total_mass(state);
  const double drift = result.summary.mass_final - result.summary.mass_initial;
  const double scale = std::max({1.0, std::abs(result.summary.mass_initial),
                                 std::abs(result.summary.mass_final)});
  result.summary.conservation_residual =
      std::abs(drift - result.summary.boundary_flux_integral) / scale;
  result.final_state = std::move(state);
  return result;
}

RunResult run_network(const NetworkConfig& cfg, const Network::StepObserver& observer) {
  return Network(cfg).run(observer);
}

}  // namespace lwrdg
