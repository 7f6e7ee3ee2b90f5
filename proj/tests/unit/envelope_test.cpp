#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <tifl/envelope.hpp>
#include <tifl/error.hpp>

#include "oracles.hpp"

using namespace tifl;

TEST(Envelope, AlongEqualsTwiceMinProjection) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 2000; ++k) {
    const Vec3 e1 = oracle::random_vector(rng), e2 = oracle::random_vector(rng);
    const Vec3 n = normalized(oracle::random_vector(rng));
    EXPECT_NEAR(envelope_along(e1, e2, n), 2.0 * std::min(std::fabs(dot(e1, n)), std::fabs(dot(e2, n))), 1e-12);
  }
}

TEST(Envelope, RejectsNonUnitDirection) {
  try {
    envelope_along({1, 0, 0}, {0, 1, 0}, {1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnitDirection);
  }
}

TEST(Envelope, ClosedFormBoundsAndApproachesSampledMaximum) {
  std::mt19937_64 rng(2);
  const auto dirs = oracle::spiral_directions(200000);
  for (int k = 0; k < 100; ++k) {
    const Vec3 e1 = oracle::random_vector(rng), e2 = oracle::random_vector(rng);
    const double closed = envelope_max(e1, e2);
    const double sampled = oracle::sampled_envelope(e1, e2, dirs);
    EXPECT_GE(closed, sampled * (1.0 - 1e-12));
    EXPECT_LE(closed - sampled, 3e-3 * closed) << k;
  }
}

TEST(Envelope, ClosedFormBranches) {
  // Collinear carriers: twice the weaker amplitude.
  EXPECT_DOUBLE_EQ(envelope_max({3, 0, 0}, {1, 0, 0}), 2.0);
  EXPECT_DOUBLE_EQ(envelope_max({3, 0, 0}, {-1, 0, 0}), 2.0);
  // Orthogonal carriers of equal size: 2|e2 x (e1 - e2)| / |e1 - e2| = sqrt(2).
  EXPECT_NEAR(envelope_max({1, 0, 0}, {0, 1, 0}), std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(envelope_max({0, 0, 0}, {1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(envelope_max({1, 2, 3}, {1, 2, 3}), 2.0 * std::sqrt(14.0));
}

TEST(Envelope, Symmetries) {
  std::mt19937_64 rng(4);
  const Mat3 rot = rotation(normalized(Vec3{1, 2, -1}), 1.1);
  for (int k = 0; k < 500; ++k) {
    const Vec3 e1 = oracle::random_vector(rng), e2 = oracle::random_vector(rng);
    const double v = envelope_max(e1, e2);
    EXPECT_NEAR(envelope_max(e2, e1), v, 1e-12 * v);
    EXPECT_NEAR(envelope_max(-e1, e2), v, 1e-12 * v);
    EXPECT_NEAR(envelope_max(e1 * 3.0, e2 * 3.0), 3.0 * v, 1e-12 * v);
    EXPECT_NEAR(envelope_max(rot * e1, rot * e2), v, 1e-12 * v);
    EXPECT_LE(v, 2.0 * std::min(norm(e1), norm(e2)) * (1.0 + 1e-12));
  }
}

TEST(Envelope, CarrierAngle) {
  EXPECT_NEAR(carrier_angle_deg({1, 0, 0}, {0, 1, 0}), 90.0, 1e-12);
  EXPECT_NEAR(carrier_angle_deg({1, 0, 0}, {-1, 1, 0}), 45.0, 1e-12);
  EXPECT_NEAR(carrier_angle_deg({1, 0, 0}, {-2, 0, 0}), 0.0, 1e-12);
}

TEST(Envelope, FibonacciDirectionsAreUnit) {
  const auto d = fibonacci_directions(1000);
  ASSERT_EQ(d.size(), 1000u);
  Vec3 sum{};
  for (const auto& n : d) {
    EXPECT_NEAR(norm(n), 1.0, 1e-12);
    sum += n;
  }
  EXPECT_LT(norm(sum) / 1000.0, 1e-4);  // near-zero centroid
}

TEST(Envelope, TimeDomainOracleMatchesTwiceMin) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> amp(0.1, 5.0);
  for (int k = 0; k < 50; ++k) {
    const double a1 = amp(rng), a2 = amp(rng);
    const double v = time_domain_envelope_oracle(a1, a2, 2000.0, 2010.0, 20001);
    EXPECT_NEAR(v, 2.0 * std::min(a1, a2), 1e-6 * 2.0 * std::min(a1, a2));
  }
}

TEST(Envelope, TimeDomainOracleErrors) {
  EXPECT_THROW(time_domain_envelope_oracle(1, 1, 2000, 2000, 20000), Error);
  EXPECT_THROW(time_domain_envelope_oracle(1, 1, 2000, 2010, 100), Error);
}

TEST(EnvelopePlane, RatioOneMapIsMirrorSymmetric) {
  const SphereModel m;
  for (double psi : {0.0, 25.0}) {
    const Montage mt = make_symmetric_montage(70, 40, psi, 1, 1);
    const EnvelopeMap map = envelope_plane(mt, m, {Plane::XY, 65, 0.0});
    const auto& g = map.grid;
    const int n = g.n();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const std::size_t i = static_cast<std::size_t>(r) * n + c, j = static_cast<std::size_t>(r) * n + (n - 1 - c);
        ASSERT_EQ(g.mask[i], g.mask[j]);
        if (g.mask[i]) EXPECT_NEAR(g.values[i], g.values[j], 1e-9 * std::max(1.0, g.values[i]));
      }
  }
}

TEST(EnvelopePlane, MasksOutsideAndKeepsRowMajorOrder) {
  const SphereModel m;
  const EnvelopeMap map = envelope_plane(make_symmetric_montage(90, 40, 0, 1, 1), m, {Plane::XZ, 33, 0.0});
  const auto& g = map.grid;
  EXPECT_EQ(g.mask[0], 0);
  const Point3 p = g.point(static_cast<std::size_t>(16) * 33 + 20);
  EXPECT_DOUBLE_EQ(p.z, 0.0);
  EXPECT_GT(p.x, 0.0);
  EXPECT_EQ(p.y, 0.0);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < g.size(); ++i) inside += norm(g.point(i)) < 1.0;
  EXPECT_EQ(g.inside_count(), inside);
}

TEST(EnvelopePlane, ResolutionValidation) {
  const SphereModel m;
  const Montage mt = make_symmetric_montage(90, 40, 0, 1, 1);
  EXPECT_THROW(envelope_plane(mt, m, {Plane::XY, 8, 0.0}), Error);
  try {
    envelope_plane(mt, m, {Plane::XY, 33, 1.2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyGrid);
  }
}
