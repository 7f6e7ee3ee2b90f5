#include <gtest/gtest.h>

#include <cmath>

#include <tifl/error.hpp>
#include <tifl/nelder_mead.hpp>
#include <tifl/planner.hpp>

using namespace tifl;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

PlanVector vector_of(const PlanResult& r) {
  return {r.params.phi, r.params.alpha, r.params.psi, std::log(r.params.i_left / r.params.i_right)};
}

}  // namespace

TEST(NelderMead, MinimizesRosenbrock) {
  const std::function<double(const std::array<double, 2>&)> f = [](const std::array<double, 2>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const auto r = nelder_mead<2>(f, {-1.2, 1.0}, {0.5, 0.5}, 5000, 1e-14);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 1e-3);
}

TEST(NelderMead, RespectsBudget) {
  const std::function<double(const std::array<double, 1>&)> f = [](const std::array<double, 1>& x) { return x[0]; };
  const auto r = nelder_mead<1>(f, {0.0}, {1.0}, 20, 0.0);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 22);
}

TEST(Safety, ReportsEveryLimitWithInclusiveBoundary) {
  const SphereModel m;
  const Montage mt = make_symmetric_montage(90, 40, 0, 1.0, 1.0);
  SafetyLimits lim;
  lim.max_current_per_pair = 1.0;
  lim.max_total_current = 2.0;
  const SafetyReport r = check_safety(mt, m, lim);
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.checks[0].margin, 0.0);
  lim.max_total_current = 1.5;
  const SafetyReport bad = check_safety(mt, m, lim);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.checks[2].pass);
  EXPECT_DOUBLE_EQ(bad.checks[2].margin, -0.5);
}

TEST(Safety, ZeroCurrentIsAccepted) {
  Montage mt = make_symmetric_montage(90, 40, 0, 1.0, 1.0);
  mt.left.current = 0.0;
  const SafetyReport r = check_safety(mt, SphereModel{}, SafetyLimits{});
  EXPECT_TRUE(r.pass);
  EXPECT_DOUBLE_EQ(r.checks[1].measured, 0.0);
}

TEST(Safety, LatticeStaysInsideShell) {
  const auto pts = interior_lattice(SphereModel{2.0, 0.33}, 9);
  ASSERT_FALSE(pts.empty());
  for (const auto& p : pts) EXPECT_LE(norm(p), 0.9 * 2.0 * (1 + 1e-12));
}

TEST(Planner, ResolvesCellTargets) {
  const SphereModel m;
  const Point3 t = resolve_target(std::pair{RegionLabel{1, 3}, DepthLabel::D2}, m);
  EXPECT_EQ(classify_region_xy(t, m).name(), "R_13");
  EXPECT_EQ(classify_depth_xz(t, m), DepthLabel::D2);
  EXPECT_EQ(code_of([&] { resolve_target(Point3{0, 0, 1.0}, m); }), ErrorCode::OutsideSphere);
}

TEST(Planner, CentreTargetGivesBalancedCurrents) {
  PlanRequest req;
  req.target = Point3{0, 0, 0};
  const PlanResult r = plan(req, SphereModel{});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.montage.current_ratio(), 1.0, 0.1);
  EXPECT_TRUE(check_safety(r.montage, SphereModel{}, req.limits).pass);
}

TEST(Planner, LateralTargetsFollowRatioColumns) {
  const SphereModel m;
  for (int col : {1, 3}) {
    PlanRequest req;
    req.target = std::pair{RegionLabel{2, col}, DepthLabel::D2};
    const PlanResult r = plan(req, m);
    if (col == 1) EXPECT_LT(r.montage.current_ratio(), 0.9);
    else EXPECT_GT(r.montage.current_ratio(), 1.1);
  }
}

TEST(Planner, LowTargetUsesLowerElectrodes) {
  PlanRequest req;
  req.target = Point3{0, 0, -0.3};
  const PlanResult r = plan(req, SphereModel{});
  EXPECT_GT(r.params.phi, 90.0);
  EXPECT_LT(r.params.phi, 135.0);
}

TEST(Planner, ScalesCurrentsToMeetFieldLimit) {
  PlanRequest req;
  req.target = Point3{0, 0, 0.3};
  req.limits.max_field_anywhere = 5.0;
  const PlanResult r = plan(req, SphereModel{});
  EXPECT_LT(r.current_scale, 1.0);
  EXPECT_TRUE(r.safety.pass);
  EXPECT_LE(r.safety.checks[3].measured, 5.0);
  EXPECT_TRUE(r.converged);
}

TEST(Planner, ScaleLawIsExact) {
  const SphereModel m;
  PlanRequest req;
  req.target = Point3{0.2, 0.1, 0.2};
  PlanRequest twice = req;
  twice.total_current_budget *= 2.0;
  twice.limits.max_current_per_pair *= 2.0;
  twice.limits.max_total_current *= 2.0;
  twice.limits.max_field_anywhere *= 2.0;
  const PlanResult a = plan(req, m), b = plan(twice, m);
  EXPECT_EQ(a.params.phi, b.params.phi);
  EXPECT_EQ(a.params.alpha, b.params.alpha);
  EXPECT_EQ(a.params.psi, b.params.psi);
  EXPECT_EQ(2.0 * a.envelope_at_target, b.envelope_at_target);
  EXPECT_EQ(2.0 * a.params.i_left, b.params.i_left);
}

TEST(Planner, RefiningAPlanIsIdempotent) {
  const SphereModel m;
  PlanRequest req;
  req.target = std::pair{RegionLabel{1, 1}, DepthLabel::D2};
  const PlanResult a = plan(req, m);
  const PlanResult b = refine_plan(req, m, vector_of(a));
  EXPECT_TRUE(a.refinement_converged);
  EXPECT_LE(b.objective - a.objective, req.effort.refine_tolerance);
}

TEST(Planner, DeterministicAcrossRuns) {
  PlanRequest req;
  req.target = Point3{-0.2, 0.3, 0.1};
  const PlanResult a = plan(req, SphereModel{}), b = plan(req, SphereModel{});
  EXPECT_EQ(a.params.phi, b.params.phi);
  EXPECT_EQ(a.params.i_left, b.params.i_left);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(Planner, Errors) {
  const SphereModel m;
  PlanRequest req;
  req.target = Point3{0, 0, -0.85};
  EXPECT_EQ(code_of([&] { plan(req, m); }), ErrorCode::InfeasibleTarget);
  req.target = std::pair{RegionLabel{2, 2}, DepthLabel::D4};
  EXPECT_EQ(code_of([&] { plan(req, m); }), ErrorCode::InfeasibleTarget);

  req.target = Point3{0, 0, 0};
  req.limits.max_field_anywhere = 1e-6;
  EXPECT_EQ(code_of([&] { plan(req, m); }), ErrorCode::NoSafeMontage);

  req.limits = SafetyLimits{};
  req.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_EQ(code_of([&] { plan(req, m); }), ErrorCode::Timeout);

  req.deadline.reset();
  req.total_current_budget = 0.0;
  EXPECT_EQ(code_of([&] { plan(req, m); }), ErrorCode::InvalidArgument);
}
