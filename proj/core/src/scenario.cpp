#include "tifl/scenario.hpp"

#include "tifl/error.hpp"

namespace tifl {

std::string to_string(SweptParameter p) {
  switch (p) {
    case SweptParameter::Phi: return "phi";
    case SweptParameter::Ratio: return "ratio";
    case SweptParameter::Alpha: return "alpha";
  }
  return "phi";
}

SweptParameter parse_swept_parameter(std::string_view s) {
  if (s == "phi") return SweptParameter::Phi;
  if (s == "ratio") return SweptParameter::Ratio;
  if (s == "alpha") return SweptParameter::Alpha;
  throw Error(ErrorCode::InvalidArgument, "swept parameter must be phi, ratio or alpha");
}

void ScenarioSpec::validate() const {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "scenario has no sweep values");
  if (values.size() > 1) {
    const bool up = values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      const bool ok = up ? values[i] > values[i - 1] : values[i] < values[i - 1];
      if (!ok) throw Error(ErrorCode::InvalidArgument, "sweep values must be strictly monotone");
    }
  }
  if (swept == SweptParameter::Ratio)
    for (double v : values)
      if (!(v > 0.0)) throw Error(ErrorCode::InvalidArgument, "current ratios must be positive");
}

SymmetricParams ScenarioSpec::params_at(double value) const {
  SymmetricParams p = fixed;
  switch (swept) {
    case SweptParameter::Phi: p.phi = value; break;
    case SweptParameter::Alpha: p.alpha = value; break;
    case SweptParameter::Ratio: {
      const double total = fixed.i_left + fixed.i_right;
      p.i_right = total / (1.0 + value);
      p.i_left = total - p.i_right;
      break;
    }
  }
  return p;
}

ScenarioSpec scenario_preset(std::string_view name) {
  ScenarioSpec s;
  s.name = std::string(name);
  if (name == "a") {
    s.swept = SweptParameter::Phi;
    s.fixed.alpha = 40.0;  // right pair at -20/+20, left at 160/-160
    s.values = {90.0, 60.0, 30.0};
  } else if (name == "b") {
    s.swept = SweptParameter::Ratio;
    s.fixed.phi = 70.0;
    s.fixed.alpha = 20.0;  // right pair at +10/-10, left at 170/-170
    s.values = {0.5, 1.0, 2.0};
  } else if (name == "c") {
    s.swept = SweptParameter::Alpha;
    s.fixed.phi = 90.0;
    s.values = {20.0, 60.0, 100.0};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown scenario preset (expected a, b or c)");
  }
  return s;
}

std::vector<ScenarioSpec> scenario_presets() {
  return {scenario_preset("a"), scenario_preset("b"), scenario_preset("c")};
}

ScenarioResult run_scenario(const ScenarioSpec& spec, const SphereModel& model, int resolution, double tau,
                            const Segmentation& seg) {
  spec.validate();
  ScenarioResult result;
  result.spec = spec;
  for (double value : spec.values) {
    ScenarioPoint pt;
    pt.value = value;
    pt.params = spec.params_at(value);
    const Montage montage = make_symmetric_montage(pt.params);
    pt.xy = envelope_plane(montage, model, {Plane::XY, resolution, 0.0});
    pt.xz = envelope_plane(montage, model, {Plane::XZ, resolution, 0.0});
    pt.focal_xy = extract_focal(pt.xy.grid, model, tau, seg);
    pt.focal_xz = extract_focal(pt.xz.grid, model, tau, seg);
    pt.center_to_peak_xy =
        pt.focal_xy.peak_value > 0.0 ? value_near(pt.xy.grid, {0.0, 0.0, 0.0}) / pt.focal_xy.peak_value : 0.0;
    result.points.push_back(std::move(pt));
  }
  return result;
}

}  // namespace tifl
