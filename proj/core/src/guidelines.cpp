#include "tifl/guidelines.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tifl/envelope.hpp"
#include "tifl/error.hpp"
#include "tifl/parallel.hpp"

namespace tifl {

std::string to_string(RatioRegime r) {
  switch (r) {
    case RatioRegime::Below: return "ratio<1";
    case RatioRegime::Equal: return "ratio=1";
    case RatioRegime::Above: return "ratio>1";
    case RatioRegime::NotApplicable: return "n/a";
  }
  return "n/a";
}

RatioRegime classify_ratio(double ratio, double tolerance) {
  if (std::abs(ratio - 1.0) <= tolerance) return RatioRegime::Equal;
  return ratio < 1.0 ? RatioRegime::Below : RatioRegime::Above;
}

GuidelineGrids GuidelineGrids::defaults() {
  GuidelineGrids g;
  for (int p = 15; p <= 135; p += 15) g.phi.push_back(p);
  for (int a = 10; a <= 120; a += 10) g.alpha.push_back(a);
  for (int k = -4; k <= 4; ++k) g.ratio.push_back(std::pow(2.0, k / 2.0));
  g.ratio[4] = 1.0;
  return g;
}

void GuidelineGrids::validate() const {
  if (phi.empty() || alpha.empty() || ratio.empty())
    throw Error(ErrorCode::InvalidArgument, "guideline grids must be non-empty");
  for (double p : phi)
    if (!(p > 0.0 && p <= 135.0)) throw Error(ErrorCode::PhiOffLimits, "guideline phi must lie in (0, 135]");
  for (double a : alpha)
    if (!(a > 0.0 && a < 180.0)) throw Error(ErrorCode::DegenerateAlpha, "guideline alpha must lie in (0, 180)");
  for (double r : ratio)
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "guideline ratios must be positive");
}

std::string GuidelineEntry::label() const {
  if (const auto* r = std::get_if<RegionLabel>(&target)) return r->name();
  return to_string(std::get<DepthLabel>(target));
}

namespace {

void extend(GuidelineRule& rule, const SweepCell& c) {
  if (rule.cells == 0) {
    rule.phi_min = rule.phi_max = c.phi;
    rule.alpha_min = rule.alpha_max = c.alpha;
  } else {
    rule.phi_min = std::min(rule.phi_min, c.phi);
    rule.phi_max = std::max(rule.phi_max, c.phi);
    rule.alpha_min = std::min(rule.alpha_min, c.alpha);
    rule.alpha_max = std::max(rule.alpha_max, c.alpha);
  }
  ++rule.cells;
}

}  // namespace

GuidelineReport synthesize_guidelines(const SphereModel& model, const GuidelineGrids& grids,
                                      const GuidelineOptions& options) {
  model.validate();
  grids.validate();
  GuidelineReport report;
  report.grids = grids;

  const std::size_t na = grids.alpha.size(), nr = grids.ratio.size();
  const std::size_t total = grids.phi.size() * na * nr;
  report.cells.resize(total);
  parallel_for(total, [&](std::size_t idx) {
    SweepCell& c = report.cells[idx];
    c.phi = grids.phi[idx / (na * nr)];
    c.alpha = grids.alpha[(idx / nr) % na];
    c.ratio = grids.ratio[idx % nr];
    c.regime = classify_ratio(c.ratio);
    const double i_right = 2.0 / (1.0 + c.ratio);
    const Montage m = make_symmetric_montage(c.phi, c.alpha, 0.0, 2.0 - i_right, i_right);
    const EnvelopeMap xy = envelope_plane(m, model, {Plane::XY, options.resolution, 0.0});
    const EnvelopeMap xz = envelope_plane(m, model, {Plane::XZ, options.resolution, 0.0});
    const FocalSummary fxy = extract_focal(xy.grid, model, options.tau, options.segmentation);
    const FocalSummary fxz = extract_focal(xz.grid, model, options.tau, options.segmentation);
    c.focus_xy = fxy.argmax_point;
    c.focus_xz = fxz.argmax_point;
    c.peak_xy = fxy.peak_value;
    c.region = fxy.region;
    c.depth = fxz.depth;
    c.rival_ratio = rival_peak_ratio(xy.grid, fxy, model, options.segmentation);
    c.ambiguous = c.rival_ratio >= 1.0 - options.ambiguity;
  });

  std::map<RegionLabel, std::map<RatioRegime, GuidelineRule>> by_region;
  std::map<DepthLabel, GuidelineRule> by_depth;
  for (const SweepCell& c : report.cells) {
    GuidelineRule& d = by_depth[c.depth];
    d.regime = RatioRegime::NotApplicable;
    extend(d, c);
    if (c.ambiguous) {
      ++report.ambiguous_cells;
      continue;
    }
    GuidelineRule& r = by_region[c.region][c.regime];
    r.regime = c.regime;
    extend(r, c);
  }
  for (int row = 1; row <= 3; ++row)
    for (int col = 1; col <= 3; ++col) {
      GuidelineEntry e{RegionLabel{row, col}, {}};
      if (auto it = by_region.find(RegionLabel{row, col}); it != by_region.end())
        for (const auto& [regime, rule] : it->second) e.rules.push_back(rule);
      report.regions.push_back(std::move(e));
    }
  for (DepthLabel d : {DepthLabel::D1, DepthLabel::D2, DepthLabel::D3, DepthLabel::D4}) {
    GuidelineEntry e{d, {}};
    if (auto it = by_depth.find(d); it != by_depth.end()) e.rules.push_back(it->second);
    report.depths.push_back(std::move(e));
  }
  return report;
}

}  // namespace tifl
