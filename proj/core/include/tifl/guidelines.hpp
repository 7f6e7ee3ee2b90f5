#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tifl/focal.hpp"
#include "tifl/geometry.hpp"

namespace tifl {

enum class RatioRegime { Below, Equal, Above, NotApplicable };

std::string to_string(RatioRegime r);
/// Below for I_L/I_R < 1, Equal for exactly 1 (within `tolerance` relative), Above otherwise.
RatioRegime classify_ratio(double ratio, double tolerance = 1e-12);

struct GuidelineGrids {
  std::vector<double> phi;
  std::vector<double> alpha;
  std::vector<double> ratio;

  /// phi 15..135 step 15, alpha 10..120 step 10, nine log-spaced ratios over [1/4, 4].
  static GuidelineGrids defaults();
  void validate() const;
};

struct SweepCell {
  double phi = 0.0;
  double alpha = 0.0;
  double ratio = 1.0;
  RatioRegime regime = RatioRegime::Equal;
  Point3 focus_xy;
  Point3 focus_xz;
  double peak_xy = 0.0;
  RegionLabel region;
  DepthLabel depth = DepthLabel::D2;
  double rival_ratio = 0.0;  // best competing local peak in another R_ij cell / peak
  bool ambiguous = false;    // rival_ratio >= 1 - ambiguity tolerance; excluded from the region guideline
};

/// Parameter ranges and ratio regime that reached one region or depth band.
struct GuidelineRule {
  RatioRegime regime = RatioRegime::NotApplicable;
  double phi_min = 0.0;
  double phi_max = 0.0;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  std::size_t cells = 0;
};

struct GuidelineEntry {
  std::variant<RegionLabel, DepthLabel> target;
  std::vector<GuidelineRule> rules;  // empty when no sweep cell reached the target

  std::string label() const;
};

struct GuidelineReport {
  GuidelineGrids grids;
  std::vector<SweepCell> cells;         // phi-major, then alpha, then ratio
  std::vector<GuidelineEntry> regions;  // R_11 .. R_33
  std::vector<GuidelineEntry> depths;   // D1 .. D4
  std::size_t ambiguous_cells = 0;
};

struct GuidelineOptions {
  int resolution = 101;
  double tau = kDefaultFocalThreshold;
  double ambiguity = 0.01;
  Segmentation segmentation;
};

/// Runs every (phi, alpha, ratio) montage at psi = 0, locates the xy and xz foci, and
/// aggregates which parameter ranges and ratio regimes reach each R_ij and D_k.
GuidelineReport synthesize_guidelines(const SphereModel& model, const GuidelineGrids& grids,
                                      const GuidelineOptions& options = {});

}  // namespace tifl
