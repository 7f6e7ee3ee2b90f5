#include <gtest/gtest.h>

#include <tifl/error.hpp>
#include <tifl/guidelines.hpp>

using namespace tifl;

TEST(Guidelines, RatioRegimes) {
  EXPECT_EQ(classify_ratio(0.5), RatioRegime::Below);
  EXPECT_EQ(classify_ratio(1.0), RatioRegime::Equal);
  EXPECT_EQ(classify_ratio(1.0 + 1e-13), RatioRegime::Equal);
  EXPECT_EQ(classify_ratio(1.01), RatioRegime::Above);
  EXPECT_EQ(classify_ratio(1.05, 0.1), RatioRegime::Equal);
}

TEST(Guidelines, DefaultGrids) {
  const GuidelineGrids g = GuidelineGrids::defaults();
  EXPECT_EQ(g.phi.size(), 9u);
  EXPECT_DOUBLE_EQ(g.phi.front(), 15.0);
  EXPECT_DOUBLE_EQ(g.phi.back(), 135.0);
  EXPECT_EQ(g.alpha.size(), 12u);
  ASSERT_EQ(g.ratio.size(), 9u);
  EXPECT_DOUBLE_EQ(g.ratio[4], 1.0);
  EXPECT_NEAR(g.ratio.front(), 0.25, 1e-15);
  EXPECT_NEAR(g.ratio.back(), 4.0, 1e-15);
  GuidelineGrids bad = g;
  bad.phi.push_back(150.0);
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Guidelines, SmallSweepFollowsRatioColumns) {
  GuidelineGrids g;
  g.phi = {45, 75, 105};
  g.alpha = {20, 40, 60};
  g.ratio = {0.5, 1.0, 2.0};
  GuidelineOptions opt;
  opt.resolution = 61;
  const GuidelineReport r = synthesize_guidelines(SphereModel{}, g, opt);
  ASSERT_EQ(r.cells.size(), 27u);
  ASSERT_EQ(r.regions.size(), 9u);
  ASSERT_EQ(r.depths.size(), 4u);
  for (const auto& c : r.cells) {
    if (c.ambiguous) continue;
    const int expected_col = c.regime == RatioRegime::Below ? 1 : c.regime == RatioRegime::Equal ? 2 : 3;
    EXPECT_EQ(c.region.col, expected_col) << c.phi << ' ' << c.alpha << ' ' << c.ratio;
  }
  for (const auto& c : r.cells)
    if (c.phi == 105) EXPECT_EQ(c.depth, DepthLabel::D3);
  // Cell order is phi-major, then alpha, then ratio.
  EXPECT_DOUBLE_EQ(r.cells[1].ratio, 1.0);
  EXPECT_DOUBLE_EQ(r.cells[3].alpha, 40.0);
  EXPECT_DOUBLE_EQ(r.cells[9].phi, 75.0);
}
