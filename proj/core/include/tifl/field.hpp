#pragma once

#include "tifl/geometry.hpp"
#include "tifl/vec3.hpp"

namespace tifl {

/// Quasi-static fields of one electrode pair inside the homogeneous ball.
///
/// A point current I injected at surface point e of a ball with insulating boundary
/// produces, at interior x with t = |x|/R and u = cos(angle(x, e)),
///
///   V(x) = I / (4 pi sigma R) * sum_{n>=1} (2n+1)/n t^n P_n(u)
///        = I / (4 pi sigma R) * [ 2 (1/F - 1) + ln(2 / (1 - t u + F)) ],  F = sqrt(1 - 2tu + t^2).
///
/// A pair is the anode kernel minus the cathode kernel.

struct FieldSample {
  Point3 point;
  double potential = 0.0;  // V
  Vec3 field;              // E, V/m
  Vec3 current_density;    // J = sigma E, A/m^2
};

/// Default series length when the truncated Legendre series is requested.
inline constexpr int kDefaultSeriesTerms = 64;

/// Distance (fraction of R) below which a point counts as sitting on an electrode.
inline constexpr double kSingularityRadius = 1e-6;

/// Unit-current kernel sum_{n>=1} (2n+1)/n t^n P_n(u) in closed form.
double monopole_kernel(double t, double u);

/// Same kernel by direct Legendre recurrence, truncated after `terms` terms.
double monopole_kernel_series(double t, double u, int terms);

/// sum_{n>=1} |(2n+1)/n t^n P_n(u)|; the conditioning scale of the series.
double monopole_kernel_abs_series(double t, double u, int terms);

/// Closed-form potential. Throws SurfaceSingularity within kSingularityRadius*R of an
/// electrode and Exterior for |x| >= R.
double pair_potential(const Point3& x, const ElectrodePair& pair, const SphereModel& model);

/// Truncated-series potential with `terms` >= 1 Legendre terms.
double pair_potential_series(const Point3& x, const ElectrodePair& pair, const SphereModel& model,
                             int terms = kDefaultSeriesTerms);

/// E = -grad V from the analytic gradient of the closed form.
Vec3 pair_efield(const Point3& x, const ElectrodePair& pair, const SphereModel& model);

FieldSample pair_field_sample(const Point3& x, const ElectrodePair& pair, const SphereModel& model);

/// Precomputed pair for hot loops: unit electrode directions and the potential unit
/// are resolved once. Evaluation skips the interior/singularity checks; callers
/// screen points with regular().
class PairEvaluator {
 public:
  PairEvaluator(const ElectrodePair& pair, const SphereModel& model);

  bool regular(const Point3& x) const;
  double potential(const Point3& x) const;
  Vec3 efield(const Point3& x) const;

 private:
  Vec3 anode_;
  Vec3 cathode_;
  double radius_;
  double potential_unit_;
};

/// True when x is interior and not on top of an electrode of `pair`.
bool is_regular_point(const Point3& x, const ElectrodePair& pair, const SphereModel& model);

}  // namespace tifl
