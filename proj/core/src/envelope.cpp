#include "tifl/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "tifl/error.hpp"
#include "tifl/parallel.hpp"

namespace tifl {

namespace {

constexpr double kUnitTolerance = 1e-9;

double envelope_along_unchecked(const Vec3& e1, const Vec3& e2, const Vec3& n) {
  return std::abs(std::abs(dot(e1 + e2, n)) - std::abs(dot(e1 - e2, n)));
}

}  // namespace

double envelope_along(const Vec3& e1, const Vec3& e2, const Vec3& n) {
  if (std::abs(norm(n) - 1.0) > kUnitTolerance)
    throw Error(ErrorCode::NonUnitDirection, "direction must be a unit vector");
  return envelope_along_unchecked(e1, e2, n);
}

double envelope_max(const Vec3& e1, const Vec3& e2) {
  Vec3 big = e1, small = e2;
  double nb = norm(e1), ns = norm(e2);
  if (ns > nb) {
    std::swap(big, small);
    std::swap(nb, ns);
  }
  if (ns == 0.0) return 0.0;
  double d = dot(big, small);
  if (d < 0.0) {
    small = -small;
    d = -d;
  }
  const double cos_gamma = d / (nb * ns);
  if (ns < nb * cos_gamma) return 2.0 * ns;
  const Vec3 diff = big - small;
  const double nd = norm(diff);
  if (nd == 0.0) return 2.0 * ns;  // identical carriers
  return 2.0 * norm(cross(small, diff)) / nd;
}

double carrier_angle_deg(const Vec3& e1, const Vec3& e2) {
  const double n1 = norm(e1), n2 = norm(e2);
  if (n1 == 0.0 || n2 == 0.0) return 0.0;
  const double c = std::min(1.0, std::abs(dot(e1, e2)) / (n1 * n2));
  return rad2deg(std::acos(c));
}

std::vector<Vec3> fibonacci_directions(std::size_t count) {
  std::vector<Vec3> dirs;
  dirs.reserve(count);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden * static_cast<double>(i);
    dirs.push_back({r * std::cos(a), r * std::sin(a), z});
  }
  return dirs;
}

double envelope_max_sampled(const Vec3& e1, const Vec3& e2, std::span<const Vec3> directions) {
  double best = 0.0;
  for (const Vec3& n : directions) best = std::max(best, envelope_along_unchecked(e1, e2, n));
  return best;
}

double time_domain_envelope_oracle(double a1, double a2, double f1, double f2, std::size_t samples) {
  if (f1 == f2) throw Error(ErrorCode::DegenerateFrequencies, "carrier frequencies must differ");
  if (samples < 10000) throw Error(ErrorCode::InvalidArgument, "need at least 10^4 samples per beat");
  if (samples % 2 != 0) ++samples;
  const double period = 1.0 / std::abs(f1 - f2);
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = period * static_cast<double>(k) / static_cast<double>(samples);
    // Reduce phases to one turn before scaling by 2 pi to keep them accurate.
    const double p1 = 2.0 * kPi * std::fmod(f1 * t, 1.0);
    const double p2 = 2.0 * kPi * std::fmod(f2 * t, 1.0);
    const double mag = std::abs(a1 * std::polar(1.0, p1) + a2 * std::polar(1.0, p2));
    hi = std::max(hi, mag);
    lo = std::min(lo, mag);
  }
  return hi - lo;
}

EnvelopeMap envelope_plane(const Montage& montage, const SphereModel& model, const PlaneSpec& spec) {
  const PlaneGrid<PairFields> fields = sample_plane(montage, model, spec);
  EnvelopeMap map;
  map.grid.spec = fields.spec;
  map.grid.radius = fields.radius;
  map.grid.mask = fields.mask;
  map.grid.values.assign(fields.size(), 0.0);
  std::vector<std::uint8_t> wide(fields.size(), 0);
  parallel_for(fields.size(), [&](std::size_t i) {
    if (!fields.mask[i]) return;
    const Vec3& e1 = fields.values[i].right.field;
    const Vec3& e2 = fields.values[i].left.field;
    map.grid.values[i] = envelope_max(e1, e2);
    wide[i] = carrier_angle_deg(e1, e2) >= 45.0 ? 1 : 0;
  });
  for (std::size_t i = 0; i < wide.size(); ++i) map.wide_angle_count += wide[i];
  return map;
}

}  // namespace tifl
