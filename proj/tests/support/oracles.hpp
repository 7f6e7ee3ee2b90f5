#pragma once

// Reference computations kept independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include <tifl/geometry.hpp>
#include <tifl/vec3.hpp>

namespace oracle {

using tifl::Vec3;

inline constexpr double kPi = 3.14159265358979323846;

// sum_{n=1}^{terms} (2n+1)/n t^n P_n(u), long double accumulation.
inline long double legendre_kernel(long double t, long double u, int terms) {
  long double p_prev = 1.0L, p = u, tn = t, sum = 0.0L;
  for (int n = 1; n <= terms; ++n) {
    sum += (2.0L * n + 1.0L) / n * tn * p;
    const long double next = ((2.0L * n + 1.0L) * u * p - n * p_prev) / (n + 1.0L);
    p_prev = p;
    p = next;
    tn *= t;
  }
  return sum;
}

inline long double legendre_kernel_abs(long double t, long double u, int terms) {
  long double p_prev = 1.0L, p = u, tn = t, sum = 0.0L;
  for (int n = 1; n <= terms; ++n) {
    sum += std::fabs((2.0L * n + 1.0L) / n * tn * p);
    const long double next = ((2.0L * n + 1.0L) * u * p - n * p_prev) / (n + 1.0L);
    p_prev = p;
    p = next;
    tn *= t;
  }
  return sum;
}

inline Vec3 unit_from_angles(double phi_deg, double theta_deg) {
  const double p = phi_deg * kPi / 180.0, t = theta_deg * kPi / 180.0;
  return {std::sin(p) * std::cos(t), std::sin(p) * std::sin(t), std::cos(p)};
}

struct SeriesPair {
  long double potential = 0.0L;
  long double scale = 0.0L;  // |anode term| + |cathode term| series magnitudes
};

// Pair potential by the Legendre series at x (absolute units).
inline SeriesPair series_pair_potential(const Vec3& x, const tifl::ElectrodePair& pair,
                                        const tifl::SphereModel& m, int terms) {
  const double r = std::sqrt(x.x * x.x + x.y * x.y + x.z * x.z);
  const long double t = r / m.radius;
  const long double unit = pair.current / (4.0L * kPi * m.conductivity * m.radius);
  auto cosine = [&](const Vec3& e) {
    if (r == 0.0) return 0.0L;
    return static_cast<long double>((x.x * e.x + x.y * e.y + x.z * e.z) / r);
  };
  const Vec3 a = unit_from_angles(pair.anode.phi, pair.anode.theta);
  const Vec3 c = unit_from_angles(pair.cathode.phi, pair.cathode.theta);
  SeriesPair s;
  s.potential = unit * (legendre_kernel(t, cosine(a), terms) - legendre_kernel(t, cosine(c), terms));
  s.scale = unit * (legendre_kernel_abs(t, cosine(a), terms) + legendre_kernel_abs(t, cosine(c), terms));
  return s;
}

// Central-difference gradient with step h.
template <typename F>
Vec3 fd_gradient(F&& f, const Vec3& x, double h) {
  auto d = [&](Vec3 e) { return (f(x + e * h) - f(x - e * h)) / (2.0 * h); };
  return {d({1, 0, 0}), d({0, 1, 0}), d({0, 0, 1})};
}

// 7-point Laplacian with step h.
template <typename F>
double fd_laplacian(F&& f, const Vec3& x, double h) {
  const double c = f(x);
  double s = 0.0;
  for (Vec3 e : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) s += f(x + e * h) + f(x - e * h) - 2.0 * c;
  return s / (h * h);
}

// Quasi-uniform sphere points by the golden-angle spiral.
inline std::vector<Vec3> spiral_directions(std::size_t count) {
  std::vector<Vec3> out(count);
  const double ga = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    out[i] = {rho * std::cos(ga * static_cast<double>(i)), rho * std::sin(ga * static_cast<double>(i)), z};
  }
  return out;
}

// max over directions of | |(e1+e2).n| - |(e1-e2).n| |.
inline double sampled_envelope(const Vec3& e1, const Vec3& e2, const std::vector<Vec3>& dirs) {
  const Vec3 s = e1 + e2, d = e1 - e2;
  double best = 0.0;
  for (const auto& n : dirs) {
    const double v = std::fabs(std::fabs(s.x * n.x + s.y * n.y + s.z * n.z) - std::fabs(d.x * n.x + d.y * n.y + d.z * n.z));
    best = std::max(best, v);
  }
  return best;
}

inline Vec3 random_vector(std::mt19937_64& rng, double sigma = 1.0) {
  std::normal_distribution<double> g(0.0, sigma);
  return {g(rng), g(rng), g(rng)};
}

inline Vec3 random_in_ball(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  while (true) {
    const Vec3 p{u(rng), u(rng), u(rng)};
    if (p.x * p.x + p.y * p.y + p.z * p.z < radius * radius) return p;
  }
}

inline tifl::ElectrodePair random_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> z(-1.0, 1.0), az(-179.0, 179.0);
  auto site = [&] { return tifl::ElectrodeSite{std::acos(z(rng)) * 180.0 / kPi, az(rng)}; };
  tifl::ElectrodePair p;
  p.anode = site();
  do p.cathode = site();
  while (std::fabs(p.cathode.phi - p.anode.phi) + std::fabs(p.cathode.theta - p.anode.theta) < 10.0);
  p.current = 1.0;
  return p;
}

}  // namespace oracle
