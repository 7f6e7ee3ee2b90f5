#include <gtest/gtest.h>

#include <tifl/error.hpp>
#include <tifl/scenario.hpp>

using namespace tifl;

TEST(Scenario, PresetsCarryPrintedValues) {
  const auto all = scenario_presets();
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].name, "a");
  EXPECT_EQ(all[0].values, (std::vector<double>{90, 60, 30}));
  EXPECT_DOUBLE_EQ(all[0].fixed.alpha, 40.0);
  EXPECT_EQ(all[1].swept, SweptParameter::Ratio);
  EXPECT_EQ(all[1].values, (std::vector<double>{0.5, 1, 2}));
  EXPECT_DOUBLE_EQ(all[1].fixed.phi, 70.0);
  EXPECT_DOUBLE_EQ(all[1].fixed.alpha, 20.0);
  EXPECT_EQ(all[2].values, (std::vector<double>{20, 60, 100}));
  EXPECT_THROW(scenario_preset("d"), Error);
}

TEST(Scenario, RatioSweepKeepsTotalCurrent) {
  const ScenarioSpec b = scenario_preset("b");
  const SymmetricParams p = b.params_at(2.0);
  EXPECT_DOUBLE_EQ(p.i_left + p.i_right, 2.0);
  EXPECT_NEAR(p.i_left / p.i_right, 2.0, 1e-15);
}

TEST(Scenario, ValidatesValues) {
  ScenarioSpec s = scenario_preset("a");
  s.values = {30, 60, 60};
  EXPECT_THROW(s.validate(), Error);
  s.values = {};
  EXPECT_THROW(s.validate(), Error);
  s = scenario_preset("b");
  s.values = {-1, 1};
  EXPECT_THROW(s.validate(), Error);
}

TEST(Scenario, DepthFallsWithPolarAngle) {
  const ScenarioResult r = run_scenario(scenario_preset("a"), SphereModel{}, 61);
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_GT(r.points[1].focal_xz.argmax_point.z, r.points[0].focal_xz.argmax_point.z);
  EXPECT_GT(r.points[2].focal_xz.argmax_point.z, r.points[1].focal_xz.argmax_point.z);
}

TEST(Scenario, RatioMovesFocusLaterally) {
  const ScenarioResult r = run_scenario(scenario_preset("b"), SphereModel{}, 61);
  EXPECT_LT(r.points[0].focal_xy.argmax_point.x, 0.0);
  EXPECT_EQ(r.points[1].focal_xy.argmax_point.x, 0.0);
  EXPECT_GT(r.points[2].focal_xy.argmax_point.x, 0.0);
  EXPECT_NEAR(r.points[0].focal_xy.argmax_point.x, -r.points[2].focal_xy.argmax_point.x, 1e-12);
}

TEST(Scenario, WideSpacingWeakensTheCentre) {
  const ScenarioResult r = run_scenario(scenario_preset("c"), SphereModel{}, 61);
  EXPECT_GE(r.points[0].center_to_peak_xy, 0.9);
  EXPECT_LT(r.points[2].center_to_peak_xy, r.points[0].center_to_peak_xy);
}
