#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <tifl/focal.hpp>
#include <tifl/geometry.hpp>
#include <tifl/guidelines.hpp>
#include <tifl/json_schema.hpp>
#include <tifl/laplace_grid.hpp>
#include <tifl/plane.hpp>
#include <tifl/planner.hpp>
#include <tifl/scenario.hpp>

namespace tifl::cli {

enum class Format { Csv, Json, Pgm };

/// Everything a command needs. Built from a JSON config file, then flag overrides.
struct RunConfig {
  SphereModel model;
  Segmentation segmentation;
  double tau = kDefaultFocalThreshold;
  std::optional<Json> montage;  // kept raw so either montage form round-trips
  std::optional<ScenarioSpec> scenario;
  std::optional<PlanRequest> plan;
  GuidelineGrids guideline_grids = GuidelineGrids::defaults();
  int resolution = 101;
  std::vector<Plane> planes{Plane::XY, Plane::XZ};
  std::set<Format> formats{Format::Csv, Format::Json, Format::Pgm};
  std::filesystem::path out = "out";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::chrono::milliseconds plan_timeout{120000};
  GridSolveOptions grid;

  bool wants(Format f) const { return formats.count(f) != 0; }
};

/// Parses a config document. Unknown keys anywhere throw Error(BadConfig).
///
/// {
///   "model": {"radius", "conductivity"},
///   "segmentation": {"partition": {...}, "bands": {...}},
///   "tau": 0.75,
///   "montage": compact or four-site montage,
///   "scenario": "a" | {"name", "swept", "values", "fixed"},
///   "plan": plan request,
///   "guidelines": {"phi", "alpha", "ratio"},
///   "resolution": 101,
///   "planes": ["xy", "xz"],
///   "formats": ["csv", "json", "pgm"],
///   "out": "out",
///   "server": {"host", "port", "plan_timeout_ms"},
///   "grid": {"grid_n", "tolerance", "max_iterations", "source_width"}
/// }
RunConfig parse_run_config(const Json& j);

RunConfig load_run_config(const std::filesystem::path& path);

std::set<Format> parse_formats(const std::string& list);

}  // namespace tifl::cli
