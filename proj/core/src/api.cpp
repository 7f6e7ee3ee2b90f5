#include "tifl/api.hpp"

#include "tifl/envelope.hpp"
#include "tifl/error.hpp"
#include "tifl/json_schema.hpp"
#include "tifl/planner.hpp"
#include "tifl/scenario.hpp"

namespace tifl {

namespace {

ApiResponse json_response(int status, const Json& j) { return {status, dump_json(j)}; }

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  return json_response(status, {{"schema_version", kSchemaVersion},
                                {"error", {{"code", std::string(code)}, {"message", message}}}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::PhiOffLimits:
    case ErrorCode::InfeasibleTarget:
    case ErrorCode::NoSafeMontage:
    case ErrorCode::OutsideSphere:
      return 422;
    case ErrorCode::Timeout:
      return 504;
    case ErrorCode::NoConvergence:
      return 500;
    default:
      return 400;
  }
}

template <typename F>
ApiResponse guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return error_response(status_for(e.code()), to_string(e.code()), e.what());
  } catch (const Json::exception& e) {
    return error_response(400, "BadConfig", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

Json parse_body(std::string_view body) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::BadConfig, std::string("malformed JSON body: ") + e.what());
  }
}

}  // namespace

ApiService::ApiService(ApiConfig config) : config_(std::move(config)) {
  config_.model.validate();
  config_.guideline_grids.validate();
}

ApiResponse ApiService::handle(std::string_view method, std::string_view path, std::string_view body) const {
  struct Route {
    std::string_view path, method;
  };
  static constexpr Route routes[] = {{"/api/v1/envelope", "POST"},
                                     {"/api/v1/scenarios", "GET"},
                                     {"/api/v1/plan", "POST"},
                                     {"/api/v1/guidelines", "GET"}};
  for (const auto& r : routes) {
    if (r.path != path) continue;
    if (method != r.method) return error_response(405, "MethodNotAllowed", "use " + std::string(r.method));
    if (path == "/api/v1/envelope") return envelope(body);
    if (path == "/api/v1/scenarios") return scenarios();
    if (path == "/api/v1/plan") return plan(body);
    return guidelines();
  }
  return error_response(404, "NotFound", "no such endpoint");
}

ApiResponse ApiService::envelope(std::string_view body) const {
  return guarded([&] {
    const Json req = parse_body(body);
    JsonObject o(req, "envelope request");
    const Montage montage = montage_from_json(o.at("montage"));
    PlaneSpec spec;
    spec.plane = parse_plane(o.string("plane", "xy"));
    spec.resolution = o.integer("resolution", spec.resolution);
    spec.offset = o.number("offset", 0.0);
    o.finish();
    if (spec.resolution > config_.max_resolution)
      return error_response(413, "ResolutionTooLarge",
                            "resolution must be at most " + std::to_string(config_.max_resolution));
    if (spec.resolution < config_.min_resolution)
      return error_response(400, "InvalidArgument",
                            "resolution must be at least " + std::to_string(config_.min_resolution));
    const EnvelopeMap map = envelope_plane(montage, config_.model, spec);
    const FocalSummary focal = extract_focal(map.grid, config_.model, config_.tau, config_.segmentation);
    Json grid = to_json(map);
    Json out = {{"schema_version", kSchemaVersion}, {"grid", std::move(grid)}, {"focal", to_json(focal)}};
    return json_response(200, out);
  });
}

ApiResponse ApiService::scenarios() const {
  return guarded([&] {
    Json list = Json::array();
    for (const auto& s : scenario_presets()) list.push_back(to_json(s));
    const Json limits = {{"phi", {{"min", 0.0}, {"max", 135.0}, {"inclusive", true}}},
                         {"alpha", {{"min", 0.0}, {"max", 180.0}, {"inclusive", false}}},
                         {"ratio", {{"min", 0.25}, {"max", 4.0}, {"scale", "log"}}},
                         {"resolution", {{"min", config_.min_resolution}, {"max", config_.max_resolution}}}};
    const Json seg = {{"partition", to_json(config_.segmentation.partition)},
                      {"bands", to_json(config_.segmentation.bands)}};
    return json_response(200, {{"schema_version", kSchemaVersion},
                               {"scenarios", std::move(list)},
                               {"limits", limits},
                               {"segmentation", seg},
                               {"model", to_json(config_.model)}});
  });
}

ApiResponse ApiService::plan(std::string_view body) const {
  return guarded([&] {
    PlanRequest req = plan_request_from_json(parse_body(body));
    req.segmentation = config_.segmentation;
    req.deadline = std::chrono::steady_clock::now() + config_.plan_timeout;
    return json_response(200, to_json(tifl::plan(req, config_.model)));
  });
}

ApiResponse ApiService::guidelines() const {
  return guarded([&] {
    std::call_once(guidelines_once_, [&] {
      GuidelineOptions opt;
      opt.resolution = config_.guideline_resolution;
      opt.tau = config_.tau;
      opt.segmentation = config_.segmentation;
      guidelines_body_ = dump_json(to_json(synthesize_guidelines(config_.model, config_.guideline_grids, opt)));
    });
    return ApiResponse{200, guidelines_body_};
  });
}

}  // namespace tifl
