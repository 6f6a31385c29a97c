#include "lwrdg/config_io.hpp"

#include <fstream>

#include <json.hpp>

#include "lwrdg/errors.hpp"

namespace lwrdg {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& where, const std::string& what) {
  throw config_error("config: " + where + ": " + what);
}

double get_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) bad_key(where, "missing key \"" + key + "\"");
  if (!obj[key].is_number()) bad_key(where, "\"" + key + "\" must be a number");
  return obj[key].get<double>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) bad_key(where, "missing key \"" + key + "\"");
  if (!obj[key].is_string()) bad_key(where, "\"" + key + "\" must be a string");
  return obj[key].get<std::string>();
}

InitialSpec parse_initial(const json& obj, const std::string& where) {
  InitialSpec spec;
  const std::string type = get_string(obj, "type", where);
  if (type == "constant") {
    spec.kind = InitialSpec::Kind::Constant;
    spec.value = get_number(obj, "value", where);
  } else if (type == "sinusoid") {
    spec.kind = InitialSpec::Kind::Sinusoid;
    spec.offset = get_number(obj, "offset", where);
    spec.amplitude = get_number(obj, "amplitude", where);
    spec.frequency = get_number(obj, "frequency", where);
  } else if (type == "piecewise") {
    spec.kind = InitialSpec::Kind::Piecewise;
    spec.otherwise = get_number(obj, "otherwise", where);
    if (!obj.contains("pieces") || !obj["pieces"].is_array())
      bad_key(where, "\"pieces\" must be an array");
    for (const auto& p : obj["pieces"]) {
      InitialSpec::Piece piece;
      piece.from = get_number(p, "from", where + ".pieces");
      piece.to = get_number(p, "to", where + ".pieces");
      piece.value = get_number(p, "value", where + ".pieces");
      spec.pieces.push_back(piece);
    }
  } else {
    bad_key(where, "unknown initial type \"" + type + "\"");
  }
  return spec;
}

json initial_to_json(const InitialSpec& spec) {
  json obj;
  switch (spec.kind) {
    case InitialSpec::Kind::Constant:
      obj["type"] = "constant";
      obj["value"] = spec.value;
      break;
    case InitialSpec::Kind::Sinusoid:
      obj["type"] = "sinusoid";
      obj["offset"] = spec.offset;
      obj["amplitude"] = spec.amplitude;
      obj["frequency"] = spec.frequency;
      break;
    case InitialSpec::Kind::Piecewise:
      obj["type"] = "piecewise";
      obj["otherwise"] = spec.otherwise;
      obj["pieces"] = json::array();
      for (const auto& p : spec.pieces)
        obj["pieces"].push_back({{"from", p.from}, {"to", p.to}, {"value", p.value}});
      break;
  }
  return obj;
}

}  // namespace

NetworkConfig config_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw config_error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw config_error("config: top level must be an object");

  NetworkConfig cfg;

  if (!root.contains("roads") || !root["roads"].is_array())
    throw config_error("config: \"roads\" must be an array");
  int idx = 0;
  for (const auto& r : root["roads"]) {
    const std::string where = "roads[" + std::to_string(idx++) + "]";
    RoadSpec road;
    road.id = get_string(r, "id", where);
    road.x_min = get_number(r, "x_min", where);
    road.x_max = get_number(r, "x_max", where);
    road.cells = static_cast<int>(get_number(r, "cells", where));
    if (r.contains("degree")) road.degree = static_cast<int>(get_number(r, "degree", where));
    if (!r.contains("flux") || !r["flux"].is_object())
      bad_key(where, "\"flux\" must be an object");
    road.flux.model = get_string(r["flux"], "model", where + ".flux");
    if (r["flux"].contains("rho_max"))
      road.flux.rho_max = get_number(r["flux"], "rho_max", where + ".flux");
    if (r["flux"].contains("v_free"))
      road.flux.v_free = get_number(r["flux"], "v_free", where + ".flux");
    if (road.flux.model == "bottleneck-narrow") road.flux.rho_max = 2.0 / 3.0;
    if (!r.contains("initial") || !r["initial"].is_object())
      bad_key(where, "\"initial\" must be an object");
    road.initial = parse_initial(r["initial"], where + ".initial");
    cfg.roads.push_back(std::move(road));
  }

  if (root.contains("junctions")) {
    if (!root["junctions"].is_array())
      throw config_error("config: \"junctions\" must be an array");
    idx = 0;
    for (const auto& jn : root["junctions"]) {
      const std::string where = "junctions[" + std::to_string(idx++) + "]";
      JunctionSpec spec;
      for (const char* key : {"incoming", "outgoing"}) {
        if (!jn.contains(key) || !jn[key].is_array())
          bad_key(where, std::string("\"") + key + "\" must be an array of road ids");
        for (const auto& id : jn[key]) {
          if (!id.is_string()) bad_key(where, std::string(key) + " entries must be strings");
          (std::string(key) == "incoming" ? spec.incoming : spec.outgoing)
              .push_back(id.get<std::string>());
        }
      }
      if (jn.contains("alpha")) spec.alpha = get_number(jn, "alpha", where);
      if (jn.contains("beta")) spec.beta = get_number(jn, "beta", where);
      if (jn.contains("q")) spec.q = get_number(jn, "q", where);
      cfg.junctions.push_back(std::move(spec));
    }
  }

  if (root.contains("boundaries")) {
    if (!root["boundaries"].is_array())
      throw config_error("config: \"boundaries\" must be an array");
    idx = 0;
    for (const auto& b : root["boundaries"]) {
      const std::string where = "boundaries[" + std::to_string(idx++) + "]";
      BoundarySpec spec;
      spec.road = get_string(b, "road", where);
      const std::string end = get_string(b, "end", where);
      if (end == "left") spec.end = RoadEnd::Left;
      else if (end == "right") spec.end = RoadEnd::Right;
      else bad_key(where, "\"end\" must be \"left\" or \"right\"");
      const std::string kind = get_string(b, "kind", where);
      if (kind == "inflow") {
        spec.kind = BoundaryKind::Inflow;
        spec.value = get_number(b, "value", where);
      } else if (kind == "outflow") {
        spec.kind = BoundaryKind::Outflow;
      } else if (kind == "periodic") {
        spec.kind = BoundaryKind::Periodic;
      } else {
        bad_key(where, "\"kind\" must be inflow, outflow or periodic");
      }
      cfg.boundaries.push_back(std::move(spec));
    }
  }

  if (root.contains("solver")) {
    const auto& s = root["solver"];
    const std::string where = "solver";
    if (!s.is_object()) throw config_error("config: \"solver\" must be an object");
    if (s.contains("degree")) cfg.solver.degree = static_cast<int>(get_number(s, "degree", where));
    if (s.contains("cfl")) cfg.solver.cfl = get_number(s, "cfl", where);
    if (s.contains("numerical_flux")) {
      const std::string f = get_string(s, "numerical_flux", where);
      if (f == "lax-friedrichs") cfg.solver.flux_kind = NumericalFlux::LaxFriedrichs;
      else if (f == "godunov") cfg.solver.flux_kind = NumericalFlux::Godunov;
      else bad_key(where, "numerical_flux must be \"lax-friedrichs\" or \"godunov\"");
    }
    if (s.contains("tvb")) cfg.solver.tvb_enabled = s["tvb"].get<bool>();
    if (s.contains("tvb_m")) cfg.solver.tvb_m = get_number(s, "tvb_m", where);
    if (s.contains("bp")) cfg.solver.bp_enabled = s["bp"].get<bool>();
    if (s.contains("t_end")) cfg.solver.t_end = get_number(s, "t_end", where);
    if (s.contains("output_times")) {
      if (!s["output_times"].is_array()) bad_key(where, "output_times must be an array");
      for (const auto& t : s["output_times"])
        cfg.solver.output_times.push_back(t.get<double>());
    }
    if (s.contains("samples_per_cell"))
      cfg.solver.samples_per_cell = static_cast<int>(get_number(s, "samples_per_cell", where));
  }

  return cfg;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return config_from_json(text);
}

std::string config_to_json(const NetworkConfig& cfg) {
  json root;
  root["roads"] = json::array();
  for (const auto& r : cfg.roads) {
    json road;
    road["id"] = r.id;
    road["x_min"] = r.x_min;
    road["x_max"] = r.x_max;
    road["cells"] = r.cells;
    if (r.degree) road["degree"] = *r.degree;
    road["flux"] = {{"model", r.flux.model},
                    {"rho_max", r.flux.rho_max},
                    {"v_free", r.flux.v_free}};
    road["initial"] = initial_to_json(r.initial);
    root["roads"].push_back(std::move(road));
  }
  root["junctions"] = json::array();
  for (const auto& jn : cfg.junctions) {
    json j;
    j["incoming"] = jn.incoming;
    j["outgoing"] = jn.outgoing;
    // Parameter set follows the topology, not the (possibly unresolved) kind.
    const std::size_t ni = jn.incoming.size(), no = jn.outgoing.size();
    if (no == 2) j["alpha"] = jn.alpha;
    if (ni == 2 && no == 2) j["beta"] = jn.beta;
    if (ni == 2 && no == 1) j["q"] = jn.q;
    root["junctions"].push_back(std::move(j));
  }
  root["boundaries"] = json::array();
  for (const auto& b : cfg.boundaries) {
    json obj;
    obj["road"] = b.road;
    obj["end"] = b.end == RoadEnd::Left ? "left" : "right";
    switch (b.kind) {
      case BoundaryKind::Inflow:
        obj["kind"] = "inflow";
        obj["value"] = b.value;
        break;
      case BoundaryKind::Outflow: obj["kind"] = "outflow"; break;
      case BoundaryKind::Periodic: obj["kind"] = "periodic"; break;
    }
    root["boundaries"].push_back(std::move(obj));
  }
  json solver;
  solver["degree"] = cfg.solver.degree;
  if (cfg.solver.cfl) solver["cfl"] = *cfg.solver.cfl;
  solver["numerical_flux"] =
      cfg.solver.flux_kind == NumericalFlux::Godunov ? "godunov" : "lax-friedrichs";
  solver["tvb"] = cfg.solver.tvb_enabled;
  solver["tvb_m"] = cfg.solver.tvb_m;
  solver["bp"] = cfg.solver.bp_enabled;
  solver["t_end"] = cfg.solver.t_end;
  solver["output_times"] = cfg.solver.output_times;
  solver["samples_per_cell"] = cfg.solver.samples_per_cell;
  root["solver"] = std::move(solver);
  return root.dump(2) + "\n";
}

void save_config(const NetworkConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot write config file " + path.string());
  out << config_to_json(cfg);
}

}  // namespace lwrdg
