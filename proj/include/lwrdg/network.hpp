#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lwrdg/dg.hpp"
#include "lwrdg/junction.hpp"
#include "lwrdg/limiters.hpp"

namespace lwrdg {

/// Flux model selection as it appears in config files.
struct FluxSpec {
  std::string model = "quadratic";  // "quadratic" | "bottleneck-narrow"
  double rho_max = 1.0;
  double v_free = 1.0;
  FluxModel build() const;  // throws config_error for unknown keys
};

/// Initial density profile.
struct InitialSpec {
  enum class Kind { Constant, Sinusoid, Piecewise };
  struct Piece {
    double from = 0.0, to = 0.0, value = 0.0;
  };
  Kind kind = Kind::Constant;
  double value = 0.0;                                  // Constant
  double offset = 0.0, amplitude = 0.0, frequency = 0.0;  // offset + amplitude*sin(frequency*pi*x)
  std::vector<Piece> pieces;                           // Piecewise; first match wins
  double otherwise = 0.0;

  double operator()(double x) const;
  double lower_bound() const;
  double upper_bound() const;
};

enum class RoadEnd { Left, Right };
enum class BoundaryKind { Inflow, Outflow, Periodic };

struct BoundarySpec {
  std::string road;
  RoadEnd end = RoadEnd::Left;
  BoundaryKind kind = BoundaryKind::Outflow;
  double value = 0.0;  // inflow density
};

struct RoadSpec {
  std::string id;
  double x_min = 0.0, x_max = 1.0;
  int cells = 40;
  FluxSpec flux;
  InitialSpec initial;
  std::optional<int> degree;  // overrides solver.degree for this road
};

struct SolverParams {
  int degree = 1;
  std::optional<double> cfl;  // overrides the per-degree table
  std::array<double, 4> cfl_table{1.0, 0.33, 0.20, 0.14};
  NumericalFlux flux_kind = NumericalFlux::LaxFriedrichs;
  // The bound-preserving limiter is the workhorse; the TVB slope limiter is
  // opt-in (it measurably over-dissipates quadratic cells at coarse network
  // resolutions).
  bool tvb_enabled = false;
  double tvb_m = 0.0;
  bool bp_enabled = true;
  double t_end = 1.0;
  std::vector<double> output_times;  // defaults to {t_end}
  int samples_per_cell = 4;
};

struct NetworkConfig {
  std::vector<RoadSpec> roads;
  std::vector<JunctionSpec> junctions;
  std::vector<BoundarySpec> boundaries;
  SolverParams solver;
};

struct NetworkState {
  std::vector<RoadState> roads;
  double time = 0.0;
  long step = 0;
};

struct RunSummary {
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double boundary_flux_integral = 0.0;  // RK3-weighted net inflow over the run
  double conservation_residual = 0.0;   // |drift - integral| / mass scale
  long n_steps = 0;
  double dt_min = std::numeric_limits<double>::infinity();
  double dt_max = 0.0;
  // Step sizes in order, run-length encoded (dt value, repeat count).
  std::vector<std::pair<double, long>> dt_history;
  // Extremes of the Gauss-Lobatto node values over the whole run.
  double min_density = std::numeric_limits<double>::infinity();
  double max_density = -std::numeric_limits<double>::infinity();
};

struct Snapshot {
  double time = 0.0;
  NetworkState state;
};

struct RunResult {
  NetworkState final_state;
  RunSummary summary;
  std::vector<Snapshot> snapshots;  // one per requested output time
};

/// Validated simulator for one NetworkConfig. Construction checks the whole
/// config and throws config_error naming the offending entry.
class Network {
 public:
  explicit Network(NetworkConfig cfg);

  const NetworkConfig& config() const { return cfg_; }
  int n_roads() const { return static_cast<int>(cfg_.roads.size()); }
  int road_index(const std::string& id) const;  // -1 when absent
  const FluxModel& model(int road) const { return models_[road]; }
  int road_degree(int road) const { return degrees_[road]; }

  /// Projection of the initial data, with the enabled limiters applied once.
  NetworkState initial_state() const;

  /// Stable step: per-degree CFL (dx, or dx^{4/3} for cubics), capped by the
  /// bound-preserving constraint when the BP limiter is on, clipped to land
  /// exactly on the next output time and on t_end.
  double compute_dt(const NetworkState& state) const;

  struct EndFluxes {
    std::vector<double> left, right;  // per road
  };
  /// Junction coupling plus open-boundary fluxes for the given stage state.
  EndFluxes stage_boundary_fluxes(const NetworkState& state) const;

  /// One TVD-RK3 step: three stages of coupling + residual + combination +
  /// limiting. Advances state.time by dt. Accumulates the boundary-flux
  /// integral into `summary` when given.
  void rk3_step(NetworkState& state, double dt, RunSummary* summary = nullptr) const;

  using StepObserver = std::function<void(const NetworkState&)>;

  /// Steps from the initial state to t_end, recording snapshots at the
  /// requested output times. The observer (if any) sees the initial state and
  /// every accepted step.
  RunResult run(const StepObserver& observer = {}) const;

  double total_mass(const NetworkState& state) const;

 private:
  struct Attachment {
    enum class Type { Junction, Inflow, Outflow, Periodic };
    Type type = Type::Outflow;
    int junction = -1;  // index into junctions_
    int slot = -1;      // position within the junction's incoming/outgoing list
    double inflow_value = 0.0;
  };
  struct ResolvedJunction {
    JunctionSpec spec;
    std::vector<int> in_roads, out_roads;
  };

  void validate_and_resolve();
  void apply_limiters(NetworkState& state) const;
  void check_finite(const NetworkState& state) const;
  void track_extremes(const NetworkState& state, RunSummary& summary) const;

  NetworkConfig cfg_;
  std::vector<FluxModel> models_;
  std::vector<int> degrees_;
  std::vector<ResolvedJunction> junctions_;
  std::vector<Attachment> left_att_, right_att_;
};

/// Convenience wrapper: validate and run in one call.
RunResult run_network(const NetworkConfig& cfg,
                      const Network::StepObserver& observer = {});

}  // namespace lwrdg
