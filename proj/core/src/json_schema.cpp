#include "tifl/json_schema.hpp"

#include <algorithm>
#include <cmath>

#include "tifl/error.hpp"

namespace tifl {

namespace {

[[noreturn]] void bad(const std::string& context, const std::string& msg) {
  throw Error(ErrorCode::BadConfig, context + ": " + msg);
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json point_json(const Point3& p) { return Json::array({p.x, p.y, p.z}); }

Point3 point_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 3) bad(context, "expected [x, y, z]");
  Point3 p;
  double* out[3] = {&p.x, &p.y, &p.z};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number()) bad(context, "coordinates must be numbers");
    *out[i] = j[i].get<double>();
  }
  return p;
}

std::vector<double> numbers_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) bad(context, "expected an array of numbers");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) bad(context, "expected an array of numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(); }

JsonObject::JsonObject(const Json& j, std::string context) : j_(j), context_(std::move(context)) {
  if (!j_.is_object()) bad(context_, "expected an object");
}

bool JsonObject::has(const std::string& key) const { return j_.contains(key); }

const Json& JsonObject::at(const std::string& key) {
  if (!j_.contains(key)) bad(context_, "missing key '" + key + "'");
  seen_.push_back(key);
  return j_.at(key);
}

double JsonObject::number(const std::string& key) {
  const Json& v = at(key);
  if (!v.is_number()) bad(context_, "'" + key + "' must be a number");
  return v.get<double>();
}

double JsonObject::number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

int JsonObject::integer(const std::string& key, int fallback) {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_number_integer()) bad(context_, "'" + key + "' must be an integer");
  return v.get<int>();
}

std::string JsonObject::string(const std::string& key) {
  const Json& v = at(key);
  if (!v.is_string()) bad(context_, "'" + key + "' must be a string");
  return v.get<std::string>();
}

std::string JsonObject::string(const std::string& key, const std::string& fallback) {
  return has(key) ? string(key) : fallback;
}

void JsonObject::finish() const {
  for (const auto& [key, _] : j_.items())
    if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) bad(context_, "unknown key '" + key + "'");
}

Json to_json(const SphereModel& m) { return {{"radius", m.radius}, {"conductivity", m.conductivity}}; }

SphereModel sphere_model_from_json(const Json& j) {
  JsonObject o(j, "model");
  SphereModel m;
  m.radius = o.number("radius", m.radius);
  m.conductivity = o.number("conductivity", m.conductivity);
  o.finish();
  m.validate();
  return m;
}

Json to_json(const SymmetricParams& p) {
  return {{"phi", p.phi}, {"alpha", p.alpha}, {"psi", p.psi}, {"i_left", p.i_left},
          {"i_right", p.i_right}, {"f1", p.f1}, {"f2", p.f2}};
}

SymmetricParams symmetric_params_from_json(const Json& j) {
  JsonObject o(j, "montage");
  SymmetricParams p;
  p.phi = o.number("phi", p.phi);
  p.alpha = o.number("alpha", p.alpha);
  p.psi = o.number("psi", p.psi);
  p.i_left = o.number("i_left", p.i_left);
  p.i_right = o.number("i_right", p.i_right);
  p.f1 = o.number("f1", p.f1);
  p.f2 = o.number("f2", p.f2);
  o.finish();
  return p;
}

namespace {

Json site_json(const ElectrodeSite& s) { return {{"phi", s.phi}, {"theta", s.theta}}; }

ElectrodeSite site_from_json(const Json& j, const std::string& context) {
  JsonObject o(j, context);
  ElectrodeSite s{o.number("phi"), o.number("theta")};
  o.finish();
  return s;
}

Json pair_json(const ElectrodePair& p) {
  return {{"anode", site_json(p.anode)}, {"cathode", site_json(p.cathode)}, {"current", p.current},
          {"frequency", p.frequency}};
}

ElectrodePair pair_from_json(const Json& j, const std::string& context) {
  JsonObject o(j, context);
  ElectrodePair p;
  p.anode = site_from_json(o.at("anode"), context + ".anode");
  p.cathode = site_from_json(o.at("cathode"), context + ".cathode");
  p.current = o.number("current");
  p.frequency = o.number("frequency");
  o.finish();
  return p;
}

}  // namespace

Json to_json(const Montage& m) { return {{"right", pair_json(m.right)}, {"left", pair_json(m.left)}}; }

Montage montage_from_json(const Json& j) {
  if (!j.is_object()) bad("montage", "expected an object");
  if (j.contains("right") || j.contains("left")) {
    JsonObject o(j, "montage");
    Montage m;
    m.right = pair_from_json(o.at("right"), "montage.right");
    m.left = pair_from_json(o.at("left"), "montage.left");
    o.finish();
    m.validate();
    return m;
  }
  return make_symmetric_montage(symmetric_params_from_json(j));
}

Json to_json(const RegionPartition& p) { return {{"row_edge", p.row_edge}, {"col_edge", p.col_edge}}; }

Json to_json(const DepthBands& b) { return {{"upper", b.upper}, {"middle", b.middle}, {"lower", b.lower}}; }

Segmentation segmentation_from_json(const Json& j) {
  JsonObject o(j, "segmentation");
  Segmentation s;
  if (o.has("partition")) {
    JsonObject p(o.at("partition"), "segmentation.partition");
    s.partition.row_edge = p.number("row_edge", s.partition.row_edge);
    s.partition.col_edge = p.number("col_edge", s.partition.col_edge);
    p.finish();
  }
  if (o.has("bands")) {
    JsonObject b(o.at("bands"), "segmentation.bands");
    s.bands.upper = b.number("upper", s.bands.upper);
    s.bands.middle = b.number("middle", s.bands.middle);
    s.bands.lower = b.number("lower", s.bands.lower);
    b.finish();
  }
  o.finish();
  const auto& p = s.partition;
  const auto& b = s.bands;
  if (!(p.row_edge > 0.0 && p.row_edge < 1.0 && p.col_edge > 0.0 && p.col_edge < 1.0))
    bad("segmentation", "partition edges must be in (0, 1)");
  if (!(b.upper < 1.0 && b.upper > b.middle && b.middle > b.lower && b.lower > -1.0))
    bad("segmentation", "band edges must satisfy 1 > upper > middle > lower > -1");
  return s;
}

Json to_json(const FocalSummary& f) {
  return {{"argmax_index", f.argmax_index}, {"argmax_point", point_json(f.argmax_point)},
          {"peak_value", f.peak_value},     {"region", f.region.name()},
          {"depth", to_string(f.depth)},    {"focal_extent", f.focal_extent},
          {"tau", f.tau}};
}

Json to_json(const EnvelopeMap& map) {
  const auto& g = map.grid;
  Json values = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) values.push_back(g.mask[i] ? Json(g.values[i]) : Json(nullptr));
  return {{"plane", to_string(g.spec.plane)},
          {"resolution", g.spec.resolution},
          {"offset", g.spec.offset},
          {"extent", Json::array({-g.radius, g.radius})},
          {"order", g.spec.plane == Plane::XY ? "row-major, y then x" : "row-major, z then x"},
          {"units", "V/m"},
          {"wide_angle_count", map.wide_angle_count},
          {"values", std::move(values)}};
}

Json to_json(const ScenarioSpec& s) {
  return {{"name", s.name}, {"swept", to_string(s.swept)}, {"values", s.values}, {"fixed", to_json(s.fixed)}};
}

ScenarioSpec scenario_spec_from_json(const Json& j) {
  if (j.is_string()) return scenario_preset(j.get<std::string>());
  JsonObject o(j, "scenario");
  ScenarioSpec s;
  s.name = o.string("name", "custom");
  s.swept = parse_swept_parameter(o.string("swept"));
  s.values = numbers_from_json(o.at("values"), "scenario.values");
  if (o.has("fixed")) s.fixed = symmetric_params_from_json(o.at("fixed"));
  o.finish();
  s.validate();
  return s;
}

Json to_json(const ScenarioResult& r) {
  Json points = Json::array();
  for (const auto& p : r.points)
    points.push_back({{"value", p.value},
                      {"montage", to_json(p.params)},
                      {"focal_xy", to_json(p.focal_xy)},
                      {"focal_xz", to_json(p.focal_xz)},
                      {"center_to_peak_xy", p.center_to_peak_xy},
                      {"wide_angle_count_xy", p.xy.wide_angle_count},
                      {"wide_angle_count_xz", p.xz.wide_angle_count}});
  return {{"schema_version", kSchemaVersion}, {"scenario", to_json(r.spec)}, {"points", std::move(points)}};
}

Json to_json(const GuidelineGrids& g) { return {{"phi", g.phi}, {"alpha", g.alpha}, {"ratio", g.ratio}}; }

GuidelineGrids guideline_grids_from_json(const Json& j) {
  JsonObject o(j, "guidelines");
  GuidelineGrids g = GuidelineGrids::defaults();
  if (o.has("phi")) g.phi = numbers_from_json(o.at("phi"), "guidelines.phi");
  if (o.has("alpha")) g.alpha = numbers_from_json(o.at("alpha"), "guidelines.alpha");
  if (o.has("ratio")) g.ratio = numbers_from_json(o.at("ratio"), "guidelines.ratio");
  o.finish();
  g.validate();
  return g;
}

namespace {

Json entries_json(const std::vector<GuidelineEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json rules = Json::array();
    for (const auto& r : e.rules)
      rules.push_back({{"ratio", to_string(r.regime)},
                       {"phi", Json::array({r.phi_min, r.phi_max})},
                       {"alpha", Json::array({r.alpha_min, r.alpha_max})},
                       {"cells", r.cells}});
    out.push_back({{"target", e.label()}, {"rules", std::move(rules)}});
  }
  return out;
}

}  // namespace

Json to_json(const GuidelineReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"phi", c.phi},
                     {"alpha", c.alpha},
                     {"ratio", c.ratio},
                     {"regime", to_string(c.regime)},
                     {"focus_xy", point_json(c.focus_xy)},
                     {"focus_xz", point_json(c.focus_xz)},
                     {"peak_xy", c.peak_xy},
                     {"region", c.region.name()},
                     {"depth", to_string(c.depth)},
                     {"rival_ratio", c.rival_ratio},
                     {"ambiguous", c.ambiguous}});
  return {{"schema_version", kSchemaVersion},
          {"grids", to_json(r.grids)},
          {"regions", entries_json(r.regions)},
          {"depths", entries_json(r.depths)},
          {"ambiguous_cells", r.ambiguous_cells},
          {"cells", std::move(cells)}};
}

Json to_json(const SafetyLimits& l) {
  return {{"max_field_anywhere", l.max_field_anywhere},
          {"max_current_per_pair", l.max_current_per_pair},
          {"max_total_current", l.max_total_current},
          {"note", "placeholder values, not clinically validated"}};
}

SafetyLimits safety_limits_from_json(const Json& j) {
  JsonObject o(j, "limits");
  SafetyLimits l;
  l.max_field_anywhere = o.number("max_field_anywhere", l.max_field_anywhere);
  l.max_current_per_pair = o.number("max_current_per_pair", l.max_current_per_pair);
  l.max_total_current = o.number("max_total_current", l.max_total_current);
  if (o.has("note")) o.string("note");
  o.finish();
  l.validate();
  return l;
}

Json to_json(const SafetyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"limit", c.limit}, {"measured", c.measured}, {"margin", c.margin}, {"pass", c.pass}});
  return {{"pass", r.pass}, {"checks", std::move(checks)}};
}

RegionLabel parse_region(const std::string& s) {
  if (s.size() != 4 || s.compare(0, 2, "R_") != 0 || s[2] < '1' || s[2] > '3' || s[3] < '1' || s[3] > '3')
    throw Error(ErrorCode::BadConfig, "region must look like R_12");
  return {s[2] - '0', s[3] - '0'};
}

DepthLabel parse_depth(const std::string& s) {
  if (s == "D1") return DepthLabel::D1;
  if (s == "D2") return DepthLabel::D2;
  if (s == "D3") return DepthLabel::D3;
  if (s == "D4") return DepthLabel::D4;
  throw Error(ErrorCode::BadConfig, "depth must be D1, D2, D3 or D4");
}

PlanRequest plan_request_from_json(const Json& j) {
  JsonObject o(j, "plan");
  PlanRequest r;
  const Json& t = o.at("target");
  if (t.is_array()) {
    r.target = point_from_json(t, "plan.target");
  } else {
    JsonObject to(t, "plan.target");
    r.target = std::pair{parse_region(to.string("region")), parse_depth(to.string("depth"))};
    to.finish();
  }
  r.total_current_budget = o.number("budget", r.total_current_budget);
  if (o.has("limits")) r.limits = safety_limits_from_json(o.at("limits"));
  r.focality_goal = o.number("focality_goal", r.focality_goal);
  r.exclusion_radius = o.number("exclusion_radius", r.exclusion_radius);
  r.min_useful_fraction = o.number("min_useful_fraction", r.min_useful_fraction);
  r.f1 = o.number("f1", r.f1);
  r.f2 = o.number("f2", r.f2);
  if (o.has("effort")) {
    JsonObject e(o.at("effort"), "plan.effort");
    auto& f = r.effort;
    if (e.has("phi")) f.phi = numbers_from_json(e.at("phi"), "plan.effort.phi");
    if (e.has("alpha")) f.alpha = numbers_from_json(e.at("alpha"), "plan.effort.alpha");
    f.psi_steps = e.integer("psi_steps", f.psi_steps);
    f.ratio_steps = e.integer("ratio_steps", f.ratio_steps);
    f.ratio_min = e.number("ratio_min", f.ratio_min);
    f.ratio_max = e.number("ratio_max", f.ratio_max);
    f.refine_evaluations = e.integer("refine_evaluations", f.refine_evaluations);
    f.refine_restarts = e.integer("refine_restarts", f.refine_restarts);
    f.refine_tolerance = e.number("refine_tolerance", f.refine_tolerance);
    f.sample_resolution = e.integer("sample_resolution", f.sample_resolution);
    e.finish();
  }
  if (o.has("segmentation")) r.segmentation = segmentation_from_json(o.at("segmentation"));
  o.finish();
  r.validate();
  return r;
}

Json to_json(const PlanRequest& r) {
  Json target;
  if (const auto* p = std::get_if<Point3>(&r.target)) {
    target = point_json(*p);
  } else {
    const auto& [region, depth] = std::get<std::pair<RegionLabel, DepthLabel>>(r.target);
    target = {{"region", region.name()}, {"depth", to_string(depth)}};
  }
  const auto& e = r.effort;
  return {{"target", target},
          {"budget", r.total_current_budget},
          {"limits", to_json(r.limits)},
          {"focality_goal", r.focality_goal},
          {"exclusion_radius", r.exclusion_radius},
          {"min_useful_fraction", r.min_useful_fraction},
          {"f1", r.f1},
          {"f2", r.f2},
          {"effort",
           {{"phi", e.phi},
            {"alpha", e.alpha},
            {"psi_steps", e.psi_steps},
            {"ratio_steps", e.ratio_steps},
            {"ratio_min", e.ratio_min},
            {"ratio_max", e.ratio_max},
            {"refine_evaluations", e.refine_evaluations},
            {"refine_restarts", e.refine_restarts},
            {"refine_tolerance", e.refine_tolerance},
            {"sample_resolution", e.sample_resolution}}},
          {"segmentation", {{"partition", to_json(r.segmentation.partition)}, {"bands", to_json(r.segmentation.bands)}}}};
}

Json to_json(const PlanResult& r) {
  return {{"schema_version", kSchemaVersion},
          {"montage", to_json(r.params)},
          {"sites", to_json(r.montage)},
          {"current_ratio", r.montage.current_ratio()},
          {"target", point_json(r.target)},
          {"envelope_at_target", r.envelope_at_target},
          {"off_target_peak", r.off_target_peak},
          {"focality_ratio", number_or_null(r.focality_ratio)},
          {"current_scale", r.current_scale},
          {"objective", r.objective},
          {"evaluations", r.evaluations},
          {"refinement_converged", r.refinement_converged},
          {"safety_report", to_json(r.safety)},
          {"converged", r.converged}};
}

}  // namespace tifl
