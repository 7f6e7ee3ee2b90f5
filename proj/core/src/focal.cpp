#include "tifl/focal.hpp"

#include <cmath>
#include <limits>

#include "tifl/error.hpp"

namespace tifl {

FocalSummary extract_focal(const PlaneGrid<double>& map, const SphereModel& model, double tau,
                           const Segmentation& seg) {
  if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorCode::InvalidArgument, "tau must lie in (0, 1)");
  FocalSummary s;
  s.tau = tau;
  bool found = false;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!map.mask[i]) continue;
    if (!found || map.values[i] > s.peak_value) {
      s.peak_value = map.values[i];
      s.argmax_index = i;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::EmptyMap, "envelope map has no inside samples");
  s.argmax_point = map.point(s.argmax_index);

  const double level = tau * s.peak_value;
  s.focal_mask.assign(map.size(), 0);
  std::size_t focal = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map.mask[i] && map.values[i] >= level) {
      s.focal_mask[i] = 1;
      ++focal;
    }
  }
  s.focal_extent = static_cast<double>(focal) / static_cast<double>(map.inside_count());
  const Point3& p = s.argmax_point;
  s.region = classify_region_xy({p.x, p.y, 0.0}, model, seg.partition);
  s.depth = classify_depth_xz(p, model, seg.bands);
  return s;
}

double rival_peak_ratio(const PlaneGrid<double>& map, const FocalSummary& focal, const SphereModel& model,
                        const Segmentation& seg) {
  const int n = map.n();
  double best = 0.0;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const std::size_t i = static_cast<std::size_t>(row) * n + col;
      if (!map.mask[i] || i == focal.argmax_index) continue;
      const double v = map.values[i];
      if (v <= best) continue;
      bool is_max = true;
      for (int dr = -1; dr <= 1 && is_max; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const int r2 = row + dr, c2 = col + dc;
          if (r2 < 0 || c2 < 0 || r2 >= n || c2 >= n) continue;
          const std::size_t j = static_cast<std::size_t>(r2) * n + c2;
          if (map.mask[j] && map.values[j] >= v) {
            is_max = false;
            break;
          }
        }
      if (!is_max) continue;
      const Point3 p = map.point(i);
      if (classify_region_xy({p.x, p.y, 0.0}, model, seg.partition) == focal.region) continue;
      best = v;
    }
  }
  return focal.peak_value > 0.0 ? best / focal.peak_value : 0.0;
}

double value_near(const PlaneGrid<double>& map, const Point3& p) {
  double best_d = std::numeric_limits<double>::infinity();
  double value = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!map.mask[i]) continue;
    const double d = norm(map.point(i) - p);
    if (d < best_d) {
      best_d = d;
      value = map.values[i];
    }
  }
  if (!std::isfinite(best_d)) throw Error(ErrorCode::EmptyMap, "map has no inside samples");
  return value;
}

}  // namespace tifl
