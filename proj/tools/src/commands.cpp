#include "tifl_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include <tifl/api.hpp>
#include <tifl/envelope.hpp>
#include <tifl/error.hpp>
#include <tifl/io.hpp>

#include "tifl_cli/http.hpp"

namespace tifl::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content, std::ostream& log) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw std::runtime_error("write failed for " + path.string());
  log << "wrote " << path.string() << '\n';
}

template <typename F>
std::string render(F&& f) {
  std::ostringstream os;
  f(os);
  return os.str();
}

Montage config_montage(const RunConfig& cfg) {
  if (cfg.montage) return montage_from_json(*cfg.montage);
  if (cfg.scenario) return make_symmetric_montage(cfg.scenario->params_at(cfg.scenario->values.front()));
  throw UsageError("this command needs a montage (config key 'montage' or --scenario)");
}

Json field_rows(const PlaneGrid<PairFields>& g, bool left) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g.mask[i]) continue;
    const FieldSample& s = left ? g.values[i].left : g.values[i].right;
    rows.push_back({s.point.x, s.point.y, s.point.z, s.potential, s.field.x, s.field.y, s.field.z});
  }
  return rows;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& log) {
  const Montage montage = config_montage(cfg);
  Json planes = Json::object();
  for (Plane plane : cfg.planes) {
    const std::string tag = to_string(plane);
    const PlaneSpec spec{plane, cfg.resolution, 0.0};
    const auto fields = sample_plane(montage, cfg.model, spec);
    const EnvelopeMap map = envelope_plane(montage, cfg.model, spec);
    const FocalSummary focal = extract_focal(map.grid, cfg.model, cfg.tau, cfg.segmentation);
    if (cfg.wants(Format::Csv)) {
      write_file(cfg.out / ("fields_right_" + tag + ".csv"), render([&](auto& os) { write_fields_csv(os, fields, false); }), log);
      write_file(cfg.out / ("fields_left_" + tag + ".csv"), render([&](auto& os) { write_fields_csv(os, fields, true); }), log);
      write_file(cfg.out / ("envelope_" + tag + ".csv"), render([&](auto& os) { write_envelope_csv(os, map.grid); }), log);
    }
    if (cfg.wants(Format::Json)) {
      const Json fj = {{"schema_version", kSchemaVersion},
                       {"plane", tag},
                       {"resolution", cfg.resolution},
                       {"columns", {"x", "y", "z", "V", "Ex", "Ey", "Ez"}},
                       {"right", field_rows(fields, false)},
                       {"left", field_rows(fields, true)}};
      write_file(cfg.out / ("fields_" + tag + ".json"), dump_json(fj), log);
      Json ej = to_json(map);
      ej["schema_version"] = kSchemaVersion;
      write_file(cfg.out / ("envelope_" + tag + ".json"), dump_json(ej), log);
    }
    if (cfg.wants(Format::Pgm))
      write_file(cfg.out / ("envelope_" + tag + ".pgm"), render([&](auto& os) { write_pgm(os, map.grid); }), log);
    planes[tag] = {{"focal", to_json(focal)}, {"wide_angle_count", map.wide_angle_count}};
  }
  const Json summary = {{"schema_version", kSchemaVersion},
                        {"model", to_json(cfg.model)},
                        {"montage", to_json(montage)},
                        {"current_ratio", montage.current_ratio()},
                        {"resolution", cfg.resolution},
                        {"planes", std::move(planes)}};
  write_file(cfg.out / "summary.json", dump_json(summary), log);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& log) {
  if (!cfg.scenario) throw UsageError("sweep needs a scenario (config key 'scenario' or --scenario)");
  const ScenarioResult result = run_scenario(*cfg.scenario, cfg.model, cfg.resolution, cfg.tau, cfg.segmentation);
  const std::string name = "scenario_" + result.spec.name;
  for (Plane plane : cfg.planes) {
    const std::string tag = to_string(plane);
    if (cfg.wants(Format::Csv))
      write_file(cfg.out / (name + "_" + tag + ".csv"), render([&](auto& os) { write_scenario_csv(os, result, plane); }), log);
    if (cfg.wants(Format::Pgm))
      for (const auto& pt : result.points) {
        const auto& grid = plane == Plane::XY ? pt.xy.grid : pt.xz.grid;
        write_file(cfg.out / (name + "_" + tag + "_" + format_number(pt.value) + ".pgm"),
                   render([&](auto& os) { write_pgm(os, grid); }), log);
      }
  }
  if (cfg.wants(Format::Json)) write_file(cfg.out / (name + ".json"), dump_json(to_json(result)), log);
  return kExitOk;
}

int cmd_plan(const RunConfig& cfg, std::ostream& log) {
  if (!cfg.plan) throw UsageError("plan needs a plan request (config key 'plan')");
  auto write_error = [&](const Error& e) {
    const Json j = {{"schema_version", kSchemaVersion},
                    {"request", to_json(*cfg.plan)},
                    {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    write_file(cfg.out / "plan.json", dump_json(j), log);
  };
  try {
    const PlanResult r = plan(*cfg.plan, cfg.model);
    Json j = to_json(r);
    j["request"] = to_json(*cfg.plan);
    write_file(cfg.out / "plan.json", dump_json(j), log);
    return r.converged ? kExitOk : kExitUnsafe;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfeasibleTarget || e.code() == ErrorCode::OutsideSphere) {
      write_error(e);
      log << e.what() << '\n';
      return kExitInfeasible;
    }
    if (e.code() == ErrorCode::NoSafeMontage) {
      write_error(e);
      log << e.what() << '\n';
      return kExitUnsafe;
    }
    throw;
  }
}

int cmd_guidelines(const RunConfig& cfg, std::ostream& log) {
  GuidelineOptions opt;
  opt.resolution = cfg.resolution;
  opt.tau = cfg.tau;
  opt.segmentation = cfg.segmentation;
  const GuidelineReport report = synthesize_guidelines(cfg.model, cfg.guideline_grids, opt);
  if (cfg.wants(Format::Json)) write_file(cfg.out / "guidelines.json", dump_json(to_json(report)), log);
  write_file(cfg.out / "guidelines.txt", render([&](auto& os) { write_guideline_tables(os, report); }), log);
  return kExitOk;
}

int cmd_export(const RunConfig& cfg, std::ostream& log) {
  const Montage montage = config_montage(cfg);
  for (const auto& [tag, pair] : {std::pair{"right", montage.right}, std::pair{"left", montage.left}}) {
    const GridSolution sol = solve_laplace_grid(pair, cfg.model, cfg.grid);
    const std::string csv = render([&](auto& os) { write_volume_csv(os, sol); });
    const std::string stem = std::string("volume_") + tag;
    if (cfg.wants(Format::Csv)) write_file(cfg.out / (stem + ".csv"), csv, log);
    if (cfg.wants(Format::Json)) {
      Json rows = Json::array();
      std::istringstream in(csv);
      std::string line;
      std::getline(in, line);  // header
      while (std::getline(in, line)) {
        Json row = Json::array();
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
      }
      const Json j = {{"schema_version", kSchemaVersion},
                      {"grid_n", sol.n()},
                      {"step", sol.step()},
                      {"iterations", sol.iterations()},
                      {"relative_residual", sol.relative_residual()},
                      {"columns", {"x", "y", "z", "V", "Ex", "Ey", "Ez"}},
                      {"rows", std::move(rows)}};
      write_file(cfg.out / (stem + ".json"), dump_json(j), log);
    }
  }
  return kExitOk;
}

int cmd_serve(const RunConfig& cfg, std::ostream& log) {
  ApiConfig api_cfg;
  api_cfg.model = cfg.model;
  api_cfg.segmentation = cfg.segmentation;
  api_cfg.tau = cfg.tau;
  api_cfg.plan_timeout = cfg.plan_timeout;
  api_cfg.guideline_grids = cfg.guideline_grids;
  const ApiService api(api_cfg);
  httplib::Server server;
  mount_api(server, api);
  if (!server.bind_to_port(cfg.host, cfg.port)) {
    log << "cannot bind " << cfg.host << ':' << cfg.port << '\n';
    return kExitInternal;
  }
  log << "listening on http://" << cfg.host << ':' << cfg.port << '\n' << std::flush;
  server.listen_after_bind();
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal-interference field simulator and montage planner", "tifl"};
  app.require_subcommand(1);

  std::string config_path, out_dir, scenario, plane, formats, host;
  int resolution = 0, port = 0;
  app.add_option("--config", config_path, "JSON run config")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--resolution", resolution, "samples per plane axis")->check(CLI::Range(kMinPlaneResolution, 4097));
  app.add_option("--scenario", scenario, "preset scenario")->check(CLI::IsMember({"a", "b", "c"}));
  app.add_option("--plane", plane, "restrict to one plane")->check(CLI::IsMember({"xy", "xz"}));
  app.add_option("--format", formats, "comma list of csv, json, pgm");
  app.add_option("--host", host, "serve host");
  app.add_option("--port", port, "serve port")->check(CLI::Range(1, 65535));
  app.fallthrough();

  const std::pair<const char*, int (*)(const RunConfig&, std::ostream&)> commands[] = {
      {"simulate", cmd_simulate}, {"sweep", cmd_sweep},   {"plan", cmd_plan},
      {"guidelines", cmd_guidelines}, {"serve", cmd_serve}, {"export", cmd_export}};
  const char* help[] = {"plane fields, envelope rasters and focal summary for one montage",
                        "one-parameter scenario sweep",
                        "search a montage for a target",
                        "guideline tables from the default sweep",
                        "HTTP JSON API",
                        "grid-solver volume export"};
  for (std::size_t i = 0; i < std::size(commands); ++i) app.add_subcommand(commands[i].first, help[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_run_config(config_path);
    if (!out_dir.empty()) cfg.out = out_dir;
    if (resolution) cfg.resolution = resolution;
    if (!scenario.empty()) cfg.scenario = scenario_preset(scenario);
    if (!plane.empty()) cfg.planes = {parse_plane(plane)};
    if (!formats.empty()) cfg.formats = parse_formats(formats);
    if (!host.empty()) cfg.host = host;
    if (port) cfg.port = port;

    for (const auto& [name, fn] : commands)
      if (app.got_subcommand(name)) return fn(cfg, out);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::InfeasibleTarget: return kExitInfeasible;
      case ErrorCode::NoSafeMontage: return kExitUnsafe;
      case ErrorCode::NoConvergence:
      case ErrorCode::Timeout: return kExitInternal;
      default: return kExitBadData;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace tifl::cli
