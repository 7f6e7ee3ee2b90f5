#include "tifl_cli/config.hpp"

#include <fstream>
#include <sstream>

#include <tifl/error.hpp>

namespace tifl::cli {

namespace {

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "pgm") return Format::Pgm;
  throw Error(ErrorCode::BadConfig, "format must be csv, json or pgm");
}

}  // namespace

std::set<Format> parse_formats(const std::string& list) {
  std::set<Format> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(parse_format(item));
  if (out.empty()) throw Error(ErrorCode::BadConfig, "empty format list");
  return out;
}

RunConfig parse_run_config(const Json& j) {
  JsonObject o(j, "config");
  RunConfig c;
  if (o.has("model")) c.model = sphere_model_from_json(o.at("model"));
  if (o.has("segmentation")) c.segmentation = segmentation_from_json(o.at("segmentation"));
  c.tau = o.number("tau", c.tau);
  if (o.has("montage")) {
    c.montage = o.at("montage");
    montage_from_json(*c.montage);  // reject bad montages at load time
  }
  if (o.has("scenario")) c.scenario = scenario_spec_from_json(o.at("scenario"));
  if (o.has("plan")) {
    c.plan = plan_request_from_json(o.at("plan"));
    if (o.has("segmentation")) c.plan->segmentation = c.segmentation;
  }
  if (o.has("guidelines")) c.guideline_grids = guideline_grids_from_json(o.at("guidelines"));
  c.resolution = o.integer("resolution", c.resolution);
  if (o.has("planes")) {
    const Json& p = o.at("planes");
    if (!p.is_array() || p.empty()) throw Error(ErrorCode::BadConfig, "planes must be a non-empty array");
    c.planes.clear();
    for (const auto& s : p) {
      if (!s.is_string()) throw Error(ErrorCode::BadConfig, "planes must be strings");
      c.planes.push_back(parse_plane(s.get<std::string>()));
    }
  }
  if (o.has("formats")) {
    const Json& f = o.at("formats");
    if (!f.is_array() || f.empty()) throw Error(ErrorCode::BadConfig, "formats must be a non-empty array");
    c.formats.clear();
    for (const auto& s : f) {
      if (!s.is_string()) throw Error(ErrorCode::BadConfig, "formats must be strings");
      c.formats.insert(parse_format(s.get<std::string>()));
    }
  }
  c.out = o.string("out", c.out.string());
  if (o.has("server")) {
    JsonObject s(o.at("server"), "config.server");
    c.host = s.string("host", c.host);
    c.port = s.integer("port", c.port);
    c.plan_timeout = std::chrono::milliseconds(s.integer("plan_timeout_ms", static_cast<int>(c.plan_timeout.count())));
    s.finish();
  }
  if (o.has("grid")) {
    JsonObject g(o.at("grid"), "config.grid");
    c.grid.grid_n = g.integer("grid_n", c.grid.grid_n);
    c.grid.tolerance = g.number("tolerance", c.grid.tolerance);
    c.grid.max_iterations = g.integer("max_iterations", c.grid.max_iterations);
    c.grid.source_width = g.number("source_width", c.grid.source_width);
    g.finish();
  }
  o.finish();
  if (!(c.tau > 0.0 && c.tau < 1.0)) throw Error(ErrorCode::BadConfig, "tau must be in (0, 1)");
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open config file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::BadConfig, "config is not valid JSON: " + std::string(e.what()));
  }
  return parse_run_config(j);
}

}  // namespace tifl::cli
