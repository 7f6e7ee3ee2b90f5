#include "tifl/plane.hpp"

#include <cmath>

#include "tifl/error.hpp"
#include "tifl/parallel.hpp"

namespace tifl {

std::string to_string(Plane p) { return p == Plane::XY ? "xy" : "xz"; }

Plane parse_plane(std::string_view s) {
  if (s == "xy") return Plane::XY;
  if (s == "xz") return Plane::XZ;
  throw Error(ErrorCode::InvalidArgument, "plane must be 'xy' or 'xz'");
}

void PlaneSpec::validate(const SphereModel& model) const {
  if (resolution < kMinPlaneResolution)
    throw Error(ErrorCode::InvalidArgument, "plane resolution must be at least 16");
  if (!(std::abs(offset) < model.radius))
    throw Error(ErrorCode::EmptyGrid, "plane offset leaves no sample inside the sphere");
}

PlaneGrid<char> make_plane_mask(const PlaneSpec& spec, const SphereModel& model) {
  model.validate();
  spec.validate(model);
  PlaneGrid<char> grid;
  grid.spec = spec;
  grid.radius = model.radius;
  const std::size_t total = static_cast<std::size_t>(spec.resolution) * spec.resolution;
  grid.mask.assign(total, 0);
  grid.values.assign(total, 0);
  for (std::size_t i = 0; i < total; ++i) {
    const Point3 p = grid.point(i);
    grid.mask[i] = dot(p, p) < model.radius * model.radius ? 1 : 0;
  }
  if (grid.inside_count() == 0) throw Error(ErrorCode::EmptyGrid, "no sample lies inside the sphere");
  return grid;
}

PlaneGrid<PairFields> sample_plane(const Montage& montage, const SphereModel& model, const PlaneSpec& spec) {
  montage.validate();
  const PlaneGrid<char> geometry = make_plane_mask(spec, model);
  PlaneGrid<PairFields> grid;
  grid.spec = spec;
  grid.radius = model.radius;
  grid.mask = geometry.mask;
  grid.values.resize(grid.mask.size());

  const PairEvaluator right(montage.right, model);
  const PairEvaluator left(montage.left, model);
  const double sigma = model.conductivity;
  const auto n = static_cast<std::size_t>(spec.resolution);
  parallel_for(n, [&](std::size_t row) {
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t i = row * n + col;
      if (!grid.mask[i]) continue;
      const Point3 p = grid.point(i);
      if (!right.regular(p) || !left.regular(p)) {
        grid.mask[i] = 0;
        continue;
      }
      PairFields& f = grid.values[i];
      f.right = {p, right.potential(p), right.efield(p), {}};
      f.right.current_density = f.right.field * sigma;
      f.left = {p, left.potential(p), left.efield(p), {}};
      f.left.current_density = f.left.field * sigma;
    }
  });
  return grid;
}

}  // namespace tifl
