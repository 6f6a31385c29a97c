#include <doctest.h>

#include <cstring>

#include "lwrdg/config_io.hpp"
#include "lwrdg/errors.hpp"
#include "lwrdg/presets.hpp"

using namespace lwrdg;

TEST_SUITE("config") {

TEST_CASE("every preset validates and serializes to a fixed point") {
  for (const auto& name : preset_names()) {
    const NetworkConfig cfg = build_preset(name);
    CHECK_NOTHROW([&] { Network net(cfg); }());
    const std::string once = config_to_json(cfg);
    const std::string twice = config_to_json(config_from_json(once));
    CHECK(once == twice);
  }
  CHECK_THROWS_AS((void)build_preset("no-such-scenario"), config_error);
}

TEST_CASE("preset contents") {
  const NetworkConfig b1 = build_preset("bottleneck-1");
  REQUIRE(b1.roads.size() == 2);
  CHECK(b1.roads[0].initial.value == doctest::Approx(0.66));
  CHECK(b1.roads[1].flux.model == "bottleneck-narrow");
  CHECK(b1.roads[1].x_min == doctest::Approx(1.0));
  CHECK(b1.roads[1].x_max == doctest::Approx(2.0));
  CHECK(b1.boundaries[0].kind == BoundaryKind::Inflow);
  CHECK(b1.boundaries[0].value == doctest::Approx(0.25));

  const NetworkConfig b2 = build_preset("bottleneck-2");
  CHECK(b2.roads[0].initial.value == doctest::Approx(0.0));
  CHECK(b2.boundaries[0].value == doctest::Approx(0.4));

  const NetworkConfig tt = build_preset("two-two-const");
  REQUIRE(tt.roads.size() == 4);
  CHECK(tt.junctions[0].alpha == doctest::Approx(0.4));
  CHECK(tt.junctions[0].beta == doctest::Approx(0.3));
  CHECK(tt.roads[1].initial.value == doctest::Approx(0.82732683535));
  CHECK(tt.roads[0].initial.pieces[0].value == doctest::Approx(0.4));
  CHECK(tt.roads[0].initial.otherwise == doctest::Approx(0.82732683535));

  const NetworkConfig ts = build_preset("two-two-step");
  CHECK(ts.roads[2].initial.value == doctest::Approx(0.5));
  CHECK(ts.boundaries[0].value == doctest::Approx(0.2));

  const NetworkConfig circle = build_preset("traffic-circle");
  REQUIRE(circle.roads.size() == 8);
  REQUIRE(circle.junctions.size() == 4);
  CHECK(circle.junctions[0].q == doctest::Approx(0.25));
  CHECK(circle.junctions[1].q == doctest::Approx(0.25));
  CHECK(circle.junctions[2].alpha == doctest::Approx(0.5));
  CHECK(circle.junctions[3].alpha == doctest::Approx(0.5));
  // Ring orientation 1R -> 2R -> 3R -> 4R -> 1R.
  CHECK(circle.junctions[2].incoming == std::vector<std::string>{"1R"});
  CHECK(circle.junctions[1].incoming == (std::vector<std::string>{"2", "2R"}));
  CHECK(circle.junctions[3].outgoing == (std::vector<std::string>{"4R", "4"}));
  CHECK(circle.junctions[0].incoming == (std::vector<std::string>{"1", "4R"}));

  const NetworkConfig two_one = build_preset("two-one");
  CHECK(two_one.junctions[0].q == doctest::Approx(0.5));
  CHECK(two_one.roads[1].initial.offset == doctest::Approx(0.1));
  CHECK(two_one.roads[1].initial.amplitude == doctest::Approx(0.05));
  CHECK(two_one.roads[1].initial.frequency == doctest::Approx(5.0));
}

TEST_CASE("a round-tripped preset runs bit-identically") {
  NetworkConfig cfg = build_preset("two-one");
  cfg.solver.t_end = 0.1;
  cfg.solver.output_times = {0.1};
  const NetworkConfig reread = config_from_json(config_to_json(cfg));
  const RunResult a = run_network(cfg);
  const RunResult b = run_network(reread);
  for (std::size_t r = 0; r < cfg.roads.size(); ++r) {
    const auto ca = a.final_state.roads[r].coeffs();
    const auto cb = b.final_state.roads[r].coeffs();
    REQUIRE(ca.size() == cb.size());
    CHECK(std::memcmp(ca.data(), cb.data(), ca.size() * sizeof(double)) == 0);
  }
}

TEST_CASE("validation rejects broken configs") {
  // Dangling road reference in a junction.
  NetworkConfig cfg = build_preset("bottleneck-1");
  cfg.junctions[0].outgoing = {"nowhere"};
  CHECK_THROWS_WITH_AS((void)Network(cfg), doctest::Contains("nowhere"), config_error);

  // Dangling road reference in a boundary.
  cfg = build_preset("bottleneck-1");
  cfg.boundaries[0].road = "ghost";
  CHECK_THROWS_WITH_AS((void)Network(cfg), doctest::Contains("ghost"), config_error);

  // Equal distribution fractions at a 2x2 junction.
  cfg = build_preset("two-two-step");
  cfg.junctions[0].beta = cfg.junctions[0].alpha;
  CHECK_THROWS_AS((void)Network(cfg), config_error);

  // Right-of-way outside (0, 1).
  cfg = build_preset("two-one");
  cfg.junctions[0].q = 1.0;
  CHECK_THROWS_AS((void)Network(cfg), config_error);

  // Inflow density above the road's maximum.
  cfg = build_preset("bottleneck-1");
  cfg.boundaries[0].value = 1.5;
  CHECK_THROWS_AS((void)Network(cfg), config_error);

  // A road end with no attachment.
  cfg = build_preset("bottleneck-1");
  cfg.boundaries.pop_back();
  CHECK_THROWS_AS((void)Network(cfg), config_error);

  // A road end attached twice.
  cfg = build_preset("bottleneck-1");
  cfg.boundaries.push_back({"2", RoadEnd::Right, BoundaryKind::Outflow, 0.0});
  CHECK_THROWS_AS((void)Network(cfg), config_error);

  // Periodic must pair both ends of a road.
  cfg = build_preset("accuracy");
  cfg.boundaries[1] = {"1", RoadEnd::Right, BoundaryKind::Outflow, 0.0};
  CHECK_THROWS_AS((void)Network(cfg), config_error);

  // Initial data outside the admissible density range.
  cfg = build_preset("bottleneck-1");
  cfg.roads[1].initial.value = 0.7;  // narrow road caps at 2/3
  CHECK_THROWS_AS((void)Network(cfg), config_error);

  // Unknown flux model key.
  cfg = build_preset("bottleneck-1");
  cfg.roads[0].flux.model = "triangular";
  CHECK_THROWS_WITH_AS((void)Network(cfg), doctest::Contains("triangular"), config_error);
}

TEST_CASE("parse errors name the offending key") {
  CHECK_THROWS_WITH_AS((void)config_from_json("{ not json"), doctest::Contains("invalid JSON"),
                       config_error);
  CHECK_THROWS_WITH_AS((void)config_from_json(R"({"roads": [{"id": "1"}]})"),
                       doctest::Contains("x_min"), config_error);
  CHECK_THROWS_WITH_AS(
      (void)config_from_json(
          R"({"roads": [{"id":"1","x_min":0,"x_max":1,"cells":4,
               "flux":{"model":"quadratic"},
               "initial":{"type":"mystery"}}]})"),
      doctest::Contains("mystery"), config_error);
}

}  // TEST_SUITE
