#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tifl/envelope.hpp"
#include "tifl/focal.hpp"
#include "tifl/geometry.hpp"

namespace tifl {

enum class SweptParameter { Phi, Ratio, Alpha };

std::string to_string(SweptParameter p);
SweptParameter parse_swept_parameter(std::string_view s);

/// One-parameter sweep around a fixed symmetric montage. A ratio sweep keeps the total
/// current i_left + i_right of `fixed` and splits it as I_L / I_R = value.
struct ScenarioSpec {
  std::string name;
  SweptParameter swept = SweptParameter::Phi;
  SymmetricParams fixed;
  std::vector<double> values;

  /// Throws InvalidArgument unless values are non-empty and strictly monotone.
  void validate() const;
  SymmetricParams params_at(double value) const;
};

/// Presets "a" (phi 90, 60, 30 at theta +/-20 / +/-160), "b" (ratio 0.5, 1, 2 at phi 70,
/// theta +/-10 / -/+170) and "c" (alpha 20, 60, 100 at phi 90, ratio 1).
ScenarioSpec scenario_preset(std::string_view name);
std::vector<ScenarioSpec> scenario_presets();

struct ScenarioPoint {
  double value = 0.0;
  SymmetricParams params;
  EnvelopeMap xy;
  EnvelopeMap xz;
  FocalSummary focal_xy;
  FocalSummary focal_xz;
  double center_to_peak_xy = 0.0;  // envelope at the origin over the xy peak
};

struct ScenarioResult {
  ScenarioSpec spec;
  std::vector<ScenarioPoint> points;
};

ScenarioResult run_scenario(const ScenarioSpec& spec, const SphereModel& model, int resolution = 101,
                            double tau = kDefaultFocalThreshold, const Segmentation& seg = {});

}  // namespace tifl
