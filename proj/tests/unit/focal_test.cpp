#include <gtest/gtest.h>

#include <cmath>

#include <tifl/error.hpp>
#include <tifl/focal.hpp>

using namespace tifl;

namespace {

PlaneGrid<double> synthetic(Plane plane, int n, auto&& f) {
  const SphereModel m;
  const PlaneGrid<char> mask = make_plane_mask({plane, n, 0.0}, m);
  PlaneGrid<double> g;
  g.spec = mask.spec;
  g.radius = mask.radius;
  g.mask = mask.mask;
  g.values.assign(g.mask.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.mask[i]) g.values[i] = f(g.point(i));
  return g;
}

}  // namespace

TEST(Focal, FindsPeakRegionAndExtent) {
  const Point3 c{0.5, -0.5, 0.0};
  const auto g = synthetic(Plane::XY, 101, [&](const Point3& p) { return std::exp(-dot(p - c, p - c) / 0.02); });
  const FocalSummary f = extract_focal(g, SphereModel{});
  EXPECT_NEAR(f.argmax_point.x, 0.5, 1e-12);
  EXPECT_NEAR(f.argmax_point.y, -0.5, 1e-12);
  EXPECT_DOUBLE_EQ(f.peak_value, 1.0);
  EXPECT_EQ(f.region.name(), "R_33");
  EXPECT_EQ(f.depth, DepthLabel::D2);
  // Samples above 0.75: radius sqrt(0.02 ln(4/3)) around c.
  const double r2 = 0.02 * std::log(4.0 / 3.0);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.mask[i] && dot(g.point(i) - c, g.point(i) - c) <= r2) ++expected;
  std::size_t got = 0;
  for (auto v : f.focal_mask) got += v;
  EXPECT_EQ(got, expected);
  EXPECT_NEAR(f.focal_extent, static_cast<double>(expected) / g.inside_count(), 1e-15);
}

TEST(Focal, TiesGoToFirstIndexAndXzDepth) {
  const auto g = synthetic(Plane::XZ, 41, [](const Point3& p) { return std::fabs(p.z + 0.8) < 0.03 ? 1.0 : 0.1; });
  const FocalSummary f = extract_focal(g, SphereModel{});
  std::size_t first = 0;
  while (!(g.mask[first] && g.values[first] == 1.0)) ++first;
  EXPECT_EQ(f.argmax_index, first);
  EXPECT_EQ(f.depth, DepthLabel::D4);
}

TEST(Focal, Errors) {
  auto g = synthetic(Plane::XY, 21, [](const Point3&) { return 1.0; });
  EXPECT_THROW(extract_focal(g, SphereModel{}, 0.0), Error);
  EXPECT_THROW(extract_focal(g, SphereModel{}, 1.0), Error);
  std::fill(g.mask.begin(), g.mask.end(), 0);
  try {
    extract_focal(g, SphereModel{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyMap);
  }
}

TEST(Focal, RivalPeakInAnotherCell) {
  const Point3 a{-0.5, 0.0, 0.0}, b{0.5, 0.0, 0.0};
  const auto g = synthetic(Plane::XY, 101, [&](const Point3& p) {
    return std::exp(-dot(p - a, p - a) / 0.01) + 0.995 * std::exp(-dot(p - b, p - b) / 0.01);
  });
  const FocalSummary f = extract_focal(g, SphereModel{});
  EXPECT_EQ(f.region.name(), "R_21");
  EXPECT_NEAR(rival_peak_ratio(g, f, SphereModel{}), 0.995, 1e-3);
  const auto single = synthetic(Plane::XY, 101, [&](const Point3& p) { return std::exp(-dot(p - a, p - a) / 0.01); });
  EXPECT_EQ(rival_peak_ratio(single, extract_focal(single, SphereModel{}), SphereModel{}), 0.0);
}
