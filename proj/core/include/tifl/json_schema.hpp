#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "tifl/envelope.hpp"
#include "tifl/focal.hpp"
#include "tifl/geometry.hpp"
#include "tifl/guidelines.hpp"
#include "tifl/planner.hpp"
#include "tifl/scenario.hpp"

namespace tifl {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Compact dump used for every file and response. Numbers use the shortest decimal that
/// round-trips; non-finite numbers become null.
std::string dump_json(const Json& j);

/// Strict object reader: wrong types, missing required keys and unknown keys throw BadConfig.
class JsonObject {
 public:
  JsonObject(const Json& j, std::string context);

  bool has(const std::string& key) const;
  const Json& at(const std::string& key);
  double number(const std::string& key);
  double number(const std::string& key, double fallback);
  int integer(const std::string& key, int fallback);
  std::string string(const std::string& key);
  std::string string(const std::string& key, const std::string& fallback);
  /// Throws BadConfig when a key was never read.
  void finish() const;

 private:
  const Json& j_;
  std::string context_;
  std::vector<std::string> seen_;
};

Json to_json(const SphereModel& m);
SphereModel sphere_model_from_json(const Json& j);

/// {"phi","alpha","psi","i_left","i_right","f1","f2"}; missing keys take SymmetricParams defaults.
Json to_json(const SymmetricParams& p);
SymmetricParams symmetric_params_from_json(const Json& j);

/// Four-site form: {"right": {"anode": {"phi","theta"}, "cathode": {...}, "current", "frequency"}, "left": {...}}.
Json to_json(const Montage& m);
/// Accepts the compact form (has "phi") or the four-site form (has "right"); validates the result.
Montage montage_from_json(const Json& j);

Json to_json(const RegionPartition& p);
Json to_json(const DepthBands& b);
Segmentation segmentation_from_json(const Json& j);

Json to_json(const FocalSummary& f);
/// Grid metadata plus row-major values with null for masked-out samples.
Json to_json(const EnvelopeMap& map);

Json to_json(const ScenarioSpec& s);
ScenarioSpec scenario_spec_from_json(const Json& j);
Json to_json(const ScenarioResult& r);

Json to_json(const GuidelineGrids& g);
GuidelineGrids guideline_grids_from_json(const Json& j);
Json to_json(const GuidelineReport& r);

Json to_json(const SafetyLimits& l);
SafetyLimits safety_limits_from_json(const Json& j);
Json to_json(const SafetyReport& r);

/// "target" is [x, y, z] or {"region": "R_12", "depth": "D2"}. The deadline is never read
/// from JSON.
PlanRequest plan_request_from_json(const Json& j);
Json to_json(const PlanRequest& r);
Json to_json(const PlanResult& r);

RegionLabel parse_region(const std::string& s);
DepthLabel parse_depth(const std::string& s);

}  // namespace tifl
