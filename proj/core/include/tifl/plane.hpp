#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tifl/field.hpp"
#include "tifl/geometry.hpp"

namespace tifl {

enum class Plane { XY, XZ };

std::string to_string(Plane p);
Plane parse_plane(std::string_view s);

/// A square raster over [-R, R]^2 on the xy plane (z = offset) or the xz plane (y = offset).
/// Samples sit at -R + 2R i/(n-1), so odd n puts a sample on each axis.
/// Index = row * n + col; rows follow the second in-plane axis (y or z), columns follow x.
struct PlaneSpec {
  Plane plane = Plane::XY;
  int resolution = 101;
  double offset = 0.0;

  void validate(const SphereModel& model) const;
};

inline constexpr int kMinPlaneResolution = 16;

template <typename T>
struct PlaneGrid {
  PlaneSpec spec;
  double radius = 1.0;
  std::vector<std::uint8_t> mask;  // 1 where the sample carries a value
  std::vector<T> values;

  std::size_t size() const { return mask.size(); }
  int n() const { return spec.resolution; }
  double step() const { return 2.0 * radius / (spec.resolution - 1); }
  double coordinate(int i) const { return -radius + 2.0 * radius * i / (spec.resolution - 1); }

  Point3 point(std::size_t index) const {
    const int row = static_cast<int>(index / spec.resolution);
    const int col = static_cast<int>(index % spec.resolution);
    const double a = coordinate(col);
    const double b = coordinate(row);
    return spec.plane == Plane::XY ? Point3{a, b, spec.offset} : Point3{a, spec.offset, b};
  }

  std::size_t inside_count() const {
    std::size_t c = 0;
    for (auto m : mask) c += m;
    return c;
  }
};

/// Geometry-only raster: mask = strictly inside the sphere.
PlaneGrid<char> make_plane_mask(const PlaneSpec& spec, const SphereModel& model);

struct PairFields {
  FieldSample right;  // E1
  FieldSample left;   // E2
};

/// Per-pair fields on a plane. Pairs are never summed (different carrier frequencies).
/// Samples on or within the singularity radius of an electrode are masked out.
PlaneGrid<PairFields> sample_plane(const Montage& montage, const SphereModel& model, const PlaneSpec& spec);

}  // namespace tifl
