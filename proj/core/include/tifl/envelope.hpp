#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tifl/geometry.hpp"
#include "tifl/plane.hpp"
#include "tifl/vec3.hpp"

namespace tifl {

/// Amplitude-modulation depth along unit direction n of two carriers with field vectors
/// e1, e2: | |(e1 + e2).n| - |(e1 - e2).n| |, which equals 2 min(|e1.n|, |e2.n|).
/// Throws NonUnitDirection when | |n| - 1 | > 1e-9.
double envelope_along(const Vec3& e1, const Vec3& e2, const Vec3& n);

/// Maximum of envelope_along over all unit directions, in closed form.
///
/// Fields are relabelled so |e1| >= |e2|, and e2 is negated when the angle between them
/// exceeds 90 degrees (the envelope does not depend on carrier sign). With gamma the
/// remaining angle:
///   2|e2|                           if |e2| < |e1| cos(gamma)
///   2 |e2 x (e1 - e2)| / |e1 - e2|  otherwise.
/// Returns 0 when either field is zero.
double envelope_max(const Vec3& e1, const Vec3& e2);

/// Angle in degrees between the carriers after the sign normalization above, in [0, 90].
/// Points with gamma >= 45 are reported in diagnostics.
double carrier_angle_deg(const Vec3& e1, const Vec3& e2);

/// `count` quasi-uniform unit vectors on the Fibonacci sphere lattice.
std::vector<Vec3> fibonacci_directions(std::size_t count);

/// Brute-force maximum of envelope_along over a direction set.
double envelope_max_sampled(const Vec3& e1, const Vec3& e2, std::span<const Vec3> directions);

/// Beat-envelope oracle: samples a1 exp(i 2 pi f1 t) + a2 exp(i 2 pi f2 t) over one beat period
/// 1/|f1 - f2| and returns max |.| - min |.|. An odd `samples` is rounded up so t = T/2 is hit.
/// Throws DegenerateFrequencies when f1 == f2 and InvalidArgument for samples < 10^4.
double time_domain_envelope_oracle(double a1, double a2, double f1, double f2, std::size_t samples);

struct EnvelopeMap {
  PlaneGrid<double> grid;           // am_max per masked sample, V/m
  std::size_t wide_angle_count = 0;  // masked samples with carrier angle >= 45 degrees
};

EnvelopeMap envelope_plane(const Montage& montage, const SphereModel& model, const PlaneSpec& spec);

}  // namespace tifl
