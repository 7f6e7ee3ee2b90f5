#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tifl/envelope.hpp"
#include "tifl/geometry.hpp"

namespace tifl {

/// Classification conventions shared by focal extraction, sweeps and the planner.
struct Segmentation {
  RegionPartition partition;
  DepthBands bands;
};

inline constexpr double kDefaultFocalThreshold = 0.75;

struct FocalSummary {
  std::size_t argmax_index = 0;
  Point3 argmax_point;
  double peak_value = 0.0;
  std::vector<std::uint8_t> focal_mask;  // samples with value >= tau * peak
  RegionLabel region;                    // from (x, y) of the argmax
  DepthLabel depth = DepthLabel::D2;     // from z of the argmax
  double focal_extent = 0.0;             // focal samples / inside samples
  double tau = kDefaultFocalThreshold;
};

/// Argmax over masked samples (ties go to the smallest row-major index), the tau-level
/// focal set, and its region/depth labels. Throws EmptyMap when nothing is masked in and
/// InvalidArgument when tau is outside (0, 1).
FocalSummary extract_focal(const PlaneGrid<double>& map, const SphereModel& model, double tau = kDefaultFocalThreshold,
                           const Segmentation& seg = {});

/// Best strict local maximum (8-neighbourhood) lying in a different R_ij cell than the
/// argmax, relative to the peak; 0 when there is none.
double rival_peak_ratio(const PlaneGrid<double>& map, const FocalSummary& focal, const SphereModel& model,
                        const Segmentation& seg = {});

/// Envelope value at the sample nearest to `p` on the map (masked samples only).
double value_near(const PlaneGrid<double>& map, const Point3& p);

}  // namespace tifl
