#pragma once

#include <array>
#include <string>

#include "tifl/vec3.hpp"

namespace tifl {

/// Homogeneous conducting ball. Radius in normalized length units, conductivity in S/m.
struct SphereModel {
  double radius = 1.0;
  double conductivity = 0.33;

  void validate() const;
};

/// Point electrode on the sphere surface.
/// phi: polar angle from +z in degrees, [0, 180]. theta: azimuth from +x in degrees, (-180, 180].
struct ElectrodeSite {
  double phi = 0.0;
  double theta = 0.0;

  friend bool operator==(const ElectrodeSite&, const ElectrodeSite&) = default;
};

struct ElectrodePair {
  ElectrodeSite anode;
  ElectrodeSite cathode;
  double current = 1.0;      // amperes, injected at the anode and withdrawn at the cathode
  double frequency = 2000.0; // Hz; a label only under the quasi-static model
};

/// Two-pair TI montage. `right` drives E1 at f1, `left` drives E2 at f2.
struct Montage {
  ElectrodePair right;
  ElectrodePair left;

  double current_ratio() const { return left.current / right.current; }
  double alpha_right() const;
  double alpha_left() const;

  /// Throws Error on a violated invariant (positive currents, distinct sites,
  /// distinct frequencies, sites on valid angle ranges).
  void validate() const;
};

/// The compact 8-parameter form (phi, alpha, psi, I_L, I_R, f1, f2) used by presets,
/// the planner and the JSON schema.
struct SymmetricParams {
  double phi = 90.0;
  double alpha = 40.0;
  double psi = 0.0;
  double i_left = 1.0;
  double i_right = 1.0;
  double f1 = 2000.0;
  double f2 = 2010.0;
};

/// Places the right pair at azimuths psi +/- alpha/2 and the left pair at its mirror image
/// across the yz plane, (180 - psi) -/+ alpha/2, all four at polar angle phi.
/// Right anode sits at psi + alpha/2; the left anode is its mirror.
Montage make_symmetric_montage(const SymmetricParams& p);
Montage make_symmetric_montage(double phi, double alpha, double psi, double i_left, double i_right);

/// Wraps an azimuth into (-180, 180].
double wrap_azimuth(double degrees);

Point3 site_to_cartesian(const ElectrodeSite& site, const SphereModel& model);

/// Inverse of site_to_cartesian for a nonzero point (projected radially onto the sphere).
ElectrodeSite cartesian_to_site(const Point3& p);

/// R_ij cell of the xy plane: row 1 is +y, column 3 is +x.
struct RegionLabel {
  int row = 2;
  int col = 2;

  std::string name() const;  // "R_13"
  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
  friend auto operator<=>(const RegionLabel&, const RegionLabel&) = default;
};

enum class DepthLabel { D1 = 1, D2 = 2, D3 = 3, D4 = 4 };

std::string to_string(DepthLabel d);

/// Edges of the 3x3 xy partition, as fractions of R. Rows: y > row_edge is row 1,
/// |y| <= row_edge row 2. Columns: |x| <= col_edge is column 2.
/// The center column is a narrow balance band: any current imbalance moves the focus out of it.
struct RegionPartition {
  double row_edge = 1.0 / 3.0;
  double col_edge = 0.025;
};

/// z/R edges of the four xz depth bands. Defaults are the heights of polar angles
/// 45, 90 and 135 degrees on the sphere.
struct DepthBands {
  double upper = 0.70710678118654752;   // D1 above
  double middle = 0.0;                  // D2 in [middle, upper)
  double lower = -0.70710678118654752;  // D3 in [lower, middle), D4 below
};

/// Classifies by (x, y); z is ignored. Throws OutsideSphere when |p| > R.
RegionLabel classify_region_xy(const Point3& p, const SphereModel& model,
                               const RegionPartition& partition = {});

/// Classifies by z. Throws OutsideSphere when |p| > R.
DepthLabel classify_depth_xz(const Point3& p, const SphereModel& model,
                             const DepthBands& bands = {});

/// Centroid of R_ij clipped to the disc of radius `disc_radius` (numerical, deterministic).
Point3 region_centroid(const RegionLabel& region, double disc_radius,
                       const RegionPartition& partition, double radius);

/// Midpoint of a depth band along z, in absolute units.
double depth_band_center(DepthLabel band, const SphereModel& model, const DepthBands& bands = {});

}  // namespace tifl
