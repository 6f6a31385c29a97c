#include "lwrdg/presets.hpp"

#include "lwrdg/errors.hpp"

namespace lwrdg {

namespace {

constexpr double kCongested22 = 0.82732683535;

RoadSpec road(std::string id, double x_min, double x_max, InitialSpec initial,
              FluxSpec flux = {"quadratic", 1.0, 1.0}, int cells = 40) {
  RoadSpec r;
  r.id = std::move(id);
  r.x_min = x_min;
  r.x_max = x_max;
  r.cells = cells;
  r.flux = std::move(flux);
  r.initial = std::move(initial);
  return r;
}

InitialSpec constant(double v) {
  InitialSpec s;
  s.kind = InitialSpec::Kind::Constant;
  s.value = v;
  return s;
}

InitialSpec sinusoid(double offset, double amplitude, double frequency) {
  InitialSpec s;
  s.kind = InitialSpec::Kind::Sinusoid;
  s.offset = offset;
  s.amplitude = amplitude;
  s.frequency = frequency;
  return s;
}

InitialSpec piecewise(std::vector<InitialSpec::Piece> pieces, double otherwise) {
  InitialSpec s;
  s.kind = InitialSpec::Kind::Piecewise;
  s.pieces = std::move(pieces);
  s.otherwise = otherwise;
  return s;
}

// The comb profile 'low on [0,0.2] u [0.4,0.6] u [0.8,1], high otherwise'
// shared by several scenarios.
InitialSpec comb(double low, double high) {
  return piecewise({{0.0, 0.2, low}, {0.4, 0.6, low}, {0.8, 1.0, low}}, high);
}

JunctionSpec junction(std::vector<std::string> in, std::vector<std::string> out,
                      double alpha = 0.0, double beta = 0.0, double q = 0.0) {
  JunctionSpec j;
  j.incoming = std::move(in);
  j.outgoing = std::move(out);
  if (j.incoming.size() == 1)
    j.kind = j.outgoing.size() == 1 ? JunctionKind::OneOne : JunctionKind::OneTwo;
  else
    j.kind = j.outgoing.size() == 1 ? JunctionKind::TwoOne : JunctionKind::TwoTwo;
  j.alpha = alpha;
  j.beta = beta;
  j.q = q;
  return j;
}

NetworkConfig accuracy(bool step_data) {
  NetworkConfig cfg;
  cfg.roads.push_back(road("1", 0.0, 1.0,
                           step_data ? piecewise({{0.0, 0.3, 1.0}, {0.6, 1.0, 1.0}}, 0.0)
                                     : sinusoid(0.5, 0.5, 2.0)));
  cfg.boundaries.push_back({"1", RoadEnd::Left, BoundaryKind::Periodic, 0.0});
  cfg.boundaries.push_back({"1", RoadEnd::Right, BoundaryKind::Periodic, 0.0});
  cfg.solver.t_end = 0.1;
  cfg.solver.output_times = {0.1};
  cfg.solver.bp_enabled = true;
  return cfg;
}

NetworkConfig bottleneck(InitialSpec wide_init, InitialSpec narrow_init, double inflow,
                         double t_end, std::vector<double> output_times) {
  NetworkConfig cfg;
  cfg.roads.push_back(road("1", 0.0, 1.0, std::move(wide_init)));
  cfg.roads.push_back(road("2", 1.0, 2.0, std::move(narrow_init),
                           FluxSpec{"bottleneck-narrow", 2.0 / 3.0, 1.0}));
  cfg.junctions.push_back(junction({"1"}, {"2"}));
  cfg.boundaries.push_back({"1", RoadEnd::Left, BoundaryKind::Inflow, inflow});
  cfg.boundaries.push_back({"2", RoadEnd::Right, BoundaryKind::Outflow, 0.0});
  cfg.solver.t_end = t_end;
  cfg.solver.output_times = std::move(output_times);
  return cfg;
}

NetworkConfig two_one() {
  NetworkConfig cfg;
  cfg.roads.push_back(road("1", 0.0, 1.0, comb(0.1, 0.2)));
  cfg.roads.push_back(road("2", 0.0, 1.0, sinusoid(0.1, 0.05, 5.0)));
  cfg.roads.push_back(road("3", 0.0, 1.0, constant(0.1)));
  cfg.junctions.push_back(junction({"1", "2"}, {"3"}, 0.0, 0.0, 0.5));
  cfg.boundaries.push_back({"1", RoadEnd::Left, BoundaryKind::Inflow, 0.1});
  cfg.boundaries.push_back({"2", RoadEnd::Left, BoundaryKind::Inflow, 0.1});
  cfg.boundaries.push_back({"3", RoadEnd::Right, BoundaryKind::Outflow, 0.0});
  cfg.solver.t_end = 1.0;
  cfg.solver.output_times = {0.25, 0.5, 1.0};
  return cfg;
}

NetworkConfig two_two(bool step_data) {
  NetworkConfig cfg;
  if (step_data) {
    cfg.roads.push_back(road("1", 0.0, 1.0, comb(0.2, 0.4)));
    cfg.roads.push_back(road("2", 0.0, 1.0, sinusoid(0.2, 0.1, 5.0)));
    cfg.roads.push_back(road("3", 0.0, 1.0, constant(0.5)));
    cfg.roads.push_back(road("4", 0.0, 1.0, constant(0.5)));
  } else {
    cfg.roads.push_back(road("1", 0.0, 1.0, piecewise({{0.0, 0.5, 0.4}}, kCongested22)));
    cfg.roads.push_back(road("2", 0.0, 1.0, constant(kCongested22)));
    cfg.roads.push_back(road("3", 0.0, 1.0, constant(kCongested22)));
    cfg.roads.push_back(road("4", 0.0, 1.0, constant(0.5)));
  }
  cfg.junctions.push_back(junction({"1", "2"}, {"3", "4"}, 0.4, 0.3));
  const double in1 = step_data ? 0.2 : 0.4;
  const double in2 = step_data ? 0.2 : kCongested22;
  cfg.boundaries.push_back({"1", RoadEnd::Left, BoundaryKind::Inflow, in1});
  cfg.boundaries.push_back({"2", RoadEnd::Left, BoundaryKind::Inflow, in2});
  cfg.boundaries.push_back({"3", RoadEnd::Right, BoundaryKind::Outflow, 0.0});
  cfg.boundaries.push_back({"4", RoadEnd::Right, BoundaryKind::Outflow, 0.0});
  if (step_data) {
    cfg.solver.t_end = 0.5;
    cfg.solver.output_times = {0.25, 0.5};
  } else {
    cfg.solver.t_end = 25.0;
    cfg.solver.output_times = {25.0};
  }
  return cfg;
}

NetworkConfig traffic_circle() {
  NetworkConfig cfg;
  cfg.roads.push_back(road("1", 0.0, 1.0, comb(0.25, 0.35)));
  cfg.roads.push_back(road("2", 0.0, 1.0, sinusoid(0.2, 0.2, 5.0)));
  cfg.roads.push_back(road("3", 0.0, 1.0, constant(0.5)));
  cfg.roads.push_back(road("4", 0.0, 1.0, constant(0.5)));
  for (const char* id : {"1R", "2R", "3R", "4R"})
    cfg.roads.push_back(road(id, 0.0, 1.0, constant(0.5)));
  // Ring 1R -> 2R -> 3R -> 4R -> 1R; the ring is the through street at the
  // two-in junctions (q = 0.25 for the entering road).
  cfg.junctions.push_back(junction({"1", "4R"}, {"1R"}, 0.0, 0.0, 0.25));
  cfg.junctions.push_back(junction({"2", "2R"}, {"3R"}, 0.0, 0.0, 0.25));
  cfg.junctions.push_back(junction({"1R"}, {"2R", "3"}, 0.5));
  cfg.junctions.push_back(junction({"3R"}, {"4R", "4"}, 0.5));
  cfg.boundaries.push_back({"1", RoadEnd::Left, BoundaryKind::Inflow, 0.25});
  cfg.boundaries.push_back({"2", RoadEnd::Left, BoundaryKind::Inflow, 0.4});
  cfg.boundaries.push_back({"3", RoadEnd::Right, BoundaryKind::Outflow, 0.0});
  cfg.boundaries.push_back({"4", RoadEnd::Right, BoundaryKind::Outflow, 0.0});
  cfg.solver.t_end = 1.0;
  cfg.solver.output_times = {0.5, 1.0};
  return cfg;
}

}  // namespace

NetworkConfig build_preset(const std::string& name) {
  if (name == "accuracy") return accuracy(false);
  if (name == "accuracy-step") return accuracy(true);
  if (name == "bottleneck-1")
    return bottleneck(constant(0.66), constant(0.66), 0.25, 4.0, {0.5, 1.0, 4.0});
  if (name == "bottleneck-2")
    return bottleneck(constant(0.0), constant(0.0), 0.4, 10.0, {2.0, 4.0, 10.0});
  if (name == "bottleneck-3")
    return bottleneck(sinusoid(0.4, 0.2, 5.0), constant(0.66), 0.25, 0.7,
                      {0.2, 0.5, 0.7});
  if (name == "two-one") return two_one();
  if (name == "two-two-const") return two_two(false);
  if (name == "two-two-step") return two_two(true);
  if (name == "traffic-circle") return traffic_circle();
  throw config_error("unknown preset \"" + name + "\"");
}

std::vector<std::string> preset_names() {
  return {"accuracy",   "accuracy-step", "bottleneck-1", "bottleneck-2",
          "bottleneck-3", "two-one",     "two-two-const", "two-two-step",
          "traffic-circle"};
}

}  // namespace lwrdg
