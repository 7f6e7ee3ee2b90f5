#include "tifl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tifl/error.hpp"

namespace tifl {

namespace {

constexpr double kPhiLimit = 135.0;
constexpr double kSiteTolerance = 1e-9;  // degrees-equivalent chord on the unit sphere

bool same_site(const ElectrodeSite& a, const ElectrodeSite& b) {
  const SphereModel unit{};
  return norm(site_to_cartesian(a, unit) - site_to_cartesian(b, unit)) < kSiteTolerance;
}

void validate_site(const ElectrodeSite& s) {
  if (!(s.phi >= 0.0 && s.phi <= 180.0))
    throw Error(ErrorCode::InvalidArgument, "electrode phi must lie in [0, 180]");
  if (!(s.theta > -180.0 && s.theta <= 180.0))
    throw Error(ErrorCode::InvalidArgument, "electrode theta must lie in (-180, 180]");
}

double azimuth_difference(double a, double b) { return wrap_azimuth(a - b); }

}  // namespace

void SphereModel::validate() const {
  if (!(radius > 0.0 && std::isfinite(radius)))
    throw Error(ErrorCode::InvalidArgument, "sphere radius must be positive");
  if (!(conductivity > 0.0 && std::isfinite(conductivity)))
    throw Error(ErrorCode::InvalidArgument, "conductivity must be positive");
}

double wrap_azimuth(double degrees) {
  double w = std::fmod(degrees, 360.0);
  if (w <= -180.0) w += 360.0;
  if (w > 180.0) w -= 360.0;
  return w;
}

double Montage::alpha_right() const { return azimuth_difference(right.anode.theta, right.cathode.theta); }

double Montage::alpha_left() const {
  // The left pair is the mirror image, so its anode sits at the smaller azimuth.
  return azimuth_difference(left.cathode.theta, left.anode.theta);
}

void Montage::validate() const {
  for (const ElectrodePair* pair : {&right, &left}) {
    validate_site(pair->anode);
    validate_site(pair->cathode);
    if (!(pair->current > 0.0 && std::isfinite(pair->current)))
      throw Error(ErrorCode::InvalidArgument, "pair current must be positive");
  }
  if (right.frequency == left.frequency)
    throw Error(ErrorCode::DegenerateFrequencies, "the two pairs must use different frequencies");
  const std::array<ElectrodeSite, 4> sites{right.anode, right.cathode, left.anode, left.cathode};
  for (std::size_t i = 0; i < sites.size(); ++i)
    for (std::size_t j = i + 1; j < sites.size(); ++j)
      if (same_site(sites[i], sites[j]))
        throw Error(ErrorCode::DuplicateSite, "all four electrode sites must be distinct");
}

Montage make_symmetric_montage(const SymmetricParams& p) {
  if (!(p.phi >= 0.0)) throw Error(ErrorCode::InvalidArgument, "phi must be non-negative");
  if (p.phi > kPhiLimit)
    throw Error(ErrorCode::PhiOffLimits, "phi above 135 degrees is in the off-limit D4 band");
  if (!(p.alpha > 0.0 && p.alpha < 180.0))
    throw Error(ErrorCode::DegenerateAlpha, "alpha must lie in (0, 180)");
  if (!(p.i_left > 0.0 && p.i_right > 0.0))
    throw Error(ErrorCode::InvalidArgument, "currents must be positive");

  const double half = p.alpha / 2.0;
  Montage m;
  m.right.anode = {p.phi, wrap_azimuth(p.psi + half)};
  m.right.cathode = {p.phi, wrap_azimuth(p.psi - half)};
  m.right.current = p.i_right;
  m.right.frequency = p.f1;
  m.left.anode = {p.phi, wrap_azimuth(180.0 - p.psi - half)};
  m.left.cathode = {p.phi, wrap_azimuth(180.0 - p.psi + half)};
  m.left.current = p.i_left;
  m.left.frequency = p.f2;
  m.validate();
  return m;
}

Montage make_symmetric_montage(double phi, double alpha, double psi, double i_left, double i_right) {
  SymmetricParams p;
  p.phi = phi;
  p.alpha = alpha;
  p.psi = psi;
  p.i_left = i_left;
  p.i_right = i_right;
  return make_symmetric_montage(p);
}

Point3 site_to_cartesian(const ElectrodeSite& site, const SphereModel& model) {
  const double phi = deg2rad(site.phi);
  const double theta = deg2rad(site.theta);
  const double s = std::sin(phi);
  return {model.radius * s * std::cos(theta), model.radius * s * std::sin(theta),
          model.radius * std::cos(phi)};
}

ElectrodeSite cartesian_to_site(const Point3& p) {
  const double r = norm(p);
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "cannot project the origin onto the sphere");
  const double c = std::clamp(p.z / r, -1.0, 1.0);
  ElectrodeSite s{rad2deg(std::acos(c)), 0.0};
  if (p.x != 0.0 || p.y != 0.0) s.theta = wrap_azimuth(rad2deg(std::atan2(p.y, p.x)));
  return s;
}

std::string RegionLabel::name() const {
  return "R_" + std::to_string(row) + std::to_string(col);
}

std::string to_string(DepthLabel d) { return "D" + std::to_string(static_cast<int>(d)); }

namespace {

void require_inside(const Point3& p, const SphereModel& model) {
  if (norm(p) > model.radius * (1.0 + 1e-12))
    throw Error(ErrorCode::OutsideSphere, "point lies outside the sphere");
}

}  // namespace

RegionLabel classify_region_xy(const Point3& p, const SphereModel& model,
                               const RegionPartition& partition) {
  require_inside(p, model);
  const double ry = partition.row_edge * model.radius;
  const double cx = partition.col_edge * model.radius;
  RegionLabel label;
  label.row = p.y > ry ? 1 : (p.y < -ry ? 3 : 2);
  label.col = p.x < -cx ? 1 : (p.x > cx ? 3 : 2);
  return label;
}

DepthLabel classify_depth_xz(const Point3& p, const SphereModel& model, const DepthBands& bands) {
  require_inside(p, model);
  const double zr = p.z / model.radius;
  if (zr >= bands.upper) return DepthLabel::D1;
  if (zr >= bands.middle) return DepthLabel::D2;
  if (zr >= bands.lower) return DepthLabel::D3;
  return DepthLabel::D4;
}

Point3 region_centroid(const RegionLabel& region, double disc_radius,
                       const RegionPartition& partition, double radius) {
  // Midpoint-rule integration over the clipped cell.
  constexpr int kSteps = 400;
  const double ry = partition.row_edge * radius;
  const double cx = partition.col_edge * radius;
  double sx = 0.0, sy = 0.0;
  long count = 0;
  for (int i = 0; i < kSteps; ++i) {
    const double x = -disc_radius + (i + 0.5) * 2.0 * disc_radius / kSteps;
    for (int j = 0; j < kSteps; ++j) {
      const double y = -disc_radius + (j + 0.5) * 2.0 * disc_radius / kSteps;
      if (x * x + y * y >= disc_radius * disc_radius) continue;
      const int row = y > ry ? 1 : (y < -ry ? 3 : 2);
      const int col = x < -cx ? 1 : (x > cx ? 3 : 2);
      if (row != region.row || col != region.col) continue;
      sx += x;
      sy += y;
      ++count;
    }
  }
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "region does not intersect the disc");
  return {sx / count, sy / count, 0.0};
}

double depth_band_center(DepthLabel band, const SphereModel& model, const DepthBands& bands) {
  switch (band) {
    case DepthLabel::D1: return 0.5 * (1.0 + bands.upper) * model.radius;
    case DepthLabel::D2: return 0.5 * (bands.upper + bands.middle) * model.radius;
    case DepthLabel::D3: return 0.5 * (bands.middle + bands.lower) * model.radius;
    case DepthLabel::D4: return 0.5 * (bands.lower - 1.0) * model.radius;
  }
  return 0.0;
}

}  // namespace tifl
