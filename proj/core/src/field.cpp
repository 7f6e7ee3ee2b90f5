#include "tifl/field.hpp"

#include <cmath>

#include "tifl/error.hpp"

namespace tifl {

namespace {

struct Prepared {
  Vec3 scaled;   // x / R
  Vec3 anode;    // unit vectors
  Vec3 cathode;
  double potential_unit;  // I / (4 pi sigma R)
};

Prepared prepare(const Point3& x, const ElectrodePair& pair, const SphereModel& model) {
  const SphereModel unit{};
  Prepared p{x / model.radius, site_to_cartesian(pair.anode, unit), site_to_cartesian(pair.cathode, unit),
             pair.current / (4.0 * kPi * model.conductivity * model.radius)};
  if (norm(p.scaled - p.anode) < kSingularityRadius || norm(p.scaled - p.cathode) < kSingularityRadius)
    throw Error(ErrorCode::SurfaceSingularity, "evaluation point coincides with an electrode");
  if (dot(p.scaled, p.scaled) >= 1.0)
    throw Error(ErrorCode::Exterior, "evaluation point is not strictly inside the sphere");
  return p;
}

// Kernel in vector form: s = x/R, e = unit electrode direction; F = |s - e|, t u = s.e.
double kernel(const Vec3& s, const Vec3& e) {
  const double f = norm(s - e);
  return 2.0 * (1.0 / f - 1.0) + std::log(2.0 / (1.0 - dot(s, e) + f));
}

// Gradient of the kernel with respect to s.
Vec3 kernel_gradient(const Vec3& s, const Vec3& e) {
  const Vec3 d = s - e;
  const double f = norm(d);
  const double denom = 1.0 - dot(s, e) + f;
  return d * (-2.0 / (f * f * f)) + (e - d / f) / denom;
}

}  // namespace

double monopole_kernel(double t, double u) {
  const double f = std::sqrt(1.0 - 2.0 * t * u + t * t);
  return 2.0 * (1.0 / f - 1.0) + std::log(2.0 / (1.0 - t * u + f));
}

double monopole_kernel_series(double t, double u, int terms) {
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "series needs at least one term");
  double p_prev = 1.0;  // P_0
  double p = u;         // P_1
  double tn = t;
  double sum = 0.0;
  for (int n = 1; n <= terms; ++n) {
    sum += (2.0 * n + 1.0) / n * tn * p;
    const double p_next = ((2.0 * n + 1.0) * u * p - n * p_prev) / (n + 1.0);
    p_prev = p;
    p = p_next;
    tn *= t;
  }
  return sum;
}

double monopole_kernel_abs_series(double t, double u, int terms) {
  double p_prev = 1.0;
  double p = u;
  double tn = t;
  double sum = 0.0;
  for (int n = 1; n <= terms; ++n) {
    sum += std::abs((2.0 * n + 1.0) / n * tn * p);
    const double p_next = ((2.0 * n + 1.0) * u * p - n * p_prev) / (n + 1.0);
    p_prev = p;
    p = p_next;
    tn *= t;
  }
  return sum;
}

double pair_potential(const Point3& x, const ElectrodePair& pair, const SphereModel& model) {
  const Prepared p = prepare(x, pair, model);
  return p.potential_unit * (kernel(p.scaled, p.anode) - kernel(p.scaled, p.cathode));
}

double pair_potential_series(const Point3& x, const ElectrodePair& pair, const SphereModel& model,
                             int terms) {
  const Prepared p = prepare(x, pair, model);
  const double t = norm(p.scaled);
  if (t == 0.0) return 0.0;
  const Vec3 dir = p.scaled / t;
  return p.potential_unit * (monopole_kernel_series(t, dot(dir, p.anode), terms) -
                             monopole_kernel_series(t, dot(dir, p.cathode), terms));
}

Vec3 pair_efield(const Point3& x, const ElectrodePair& pair, const SphereModel& model) {
  const Prepared p = prepare(x, pair, model);
  const Vec3 grad = kernel_gradient(p.scaled, p.anode) - kernel_gradient(p.scaled, p.cathode);
  return grad * (-p.potential_unit / model.radius);
}

FieldSample pair_field_sample(const Point3& x, const ElectrodePair& pair, const SphereModel& model) {
  const Prepared p = prepare(x, pair, model);
  FieldSample s;
  s.point = x;
  s.potential = p.potential_unit * (kernel(p.scaled, p.anode) - kernel(p.scaled, p.cathode));
  s.field = (kernel_gradient(p.scaled, p.anode) - kernel_gradient(p.scaled, p.cathode)) *
            (-p.potential_unit / model.radius);
  s.current_density = s.field * model.conductivity;
  return s;
}

PairEvaluator::PairEvaluator(const ElectrodePair& pair, const SphereModel& model)
    : anode_(site_to_cartesian(pair.anode, SphereModel{})),
      cathode_(site_to_cartesian(pair.cathode, SphereModel{})),
      radius_(model.radius),
      potential_unit_(pair.current / (4.0 * kPi * model.conductivity * model.radius)) {}

bool PairEvaluator::regular(const Point3& x) const {
  const Vec3 s = x / radius_;
  return dot(s, s) < 1.0 && norm(s - anode_) >= kSingularityRadius &&
         norm(s - cathode_) >= kSingularityRadius;
}

double PairEvaluator::potential(const Point3& x) const {
  const Vec3 s = x / radius_;
  return potential_unit_ * (kernel(s, anode_) - kernel(s, cathode_));
}

Vec3 PairEvaluator::efield(const Point3& x) const {
  const Vec3 s = x / radius_;
  return (kernel_gradient(s, anode_) - kernel_gradient(s, cathode_)) * (-potential_unit_ / radius_);
}

bool is_regular_point(const Point3& x, const ElectrodePair& pair, const SphereModel& model) {
  const SphereModel unit{};
  const Vec3 s = x / model.radius;
  return dot(s, s) < 1.0 && norm(s - site_to_cartesian(pair.anode, unit)) >= kSingularityRadius &&
         norm(s - site_to_cartesian(pair.cathode, unit)) >= kSingularityRadius;
}

}  // namespace tifl
