#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tifl/focal.hpp"
#include "tifl/geometry.hpp"

namespace tifl {

/// Placeholder limits, NOT clinically validated. Units follow the model's normalized units.
struct SafetyLimits {
  double max_field_anywhere = 100.0;  // V/m, over the interior safety sample
  double max_current_per_pair = 2.0;  // A
  double max_total_current = 4.0;     // A

  void validate() const;
};

struct SafetyCheck {
  std::string name;
  double limit = 0.0;
  double measured = 0.0;
  double margin = 0.0;  // limit - measured; the boundary counts as a pass
  bool pass = true;
};

struct SafetyReport {
  std::vector<SafetyCheck> checks;
  bool pass = true;
};

/// Fraction of R covered by the interior safety/focality sample. Point electrodes make
/// the field unbounded at the surface, so the sample stays inside this shell.
inline constexpr double kSafetyShell = 0.9;

/// Lattice of resolution^3 points over [-shell R, shell R]^3 kept where |x| <= shell R.
std::vector<Point3> interior_lattice(const SphereModel& model, int resolution, double shell = kSafetyShell);

/// Compares per-pair and total current and max |E1|, |E2| over interior_lattice with the
/// limits. Accepts zero currents. Never throws on a violation; the report carries it.
SafetyReport check_safety(const Montage& montage, const SphereModel& model, const SafetyLimits& limits,
                          int resolution = 17);

struct SearchEffort {
  std::vector<double> phi{20, 40, 60, 80, 100, 120};
  std::vector<double> alpha{20, 40, 60, 80, 100, 120};
  int psi_steps = 12;     // midpoints of equal slices of (-90, 90)
  int ratio_steps = 9;    // log-spaced over [ratio_min, ratio_max]
  double ratio_min = 0.25;
  double ratio_max = 4.0;
  int refine_evaluations = 200;  // per simplex run
  int refine_restarts = 25;      // simplex restarts from the incumbent while it keeps improving
  double refine_tolerance = 1e-6;
  int sample_resolution = 17;  // interior lattice for off-target peak and safety
};

using PlanTarget = std::variant<Point3, std::pair<RegionLabel, DepthLabel>>;

struct PlanRequest {
  PlanTarget target = Point3{};
  double total_current_budget = 2.0;
  SafetyLimits limits;
  SearchEffort effort;
  double focality_goal = 1.0;      // wanted envelope_at_target / off-target peak
  double exclusion_radius = 0.3;   // fraction of R around the target not counted as off-target
  double min_useful_fraction = 0.05;
  double f1 = 2000.0;
  double f2 = 2010.0;
  Segmentation segmentation;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void validate() const;
};

/// Search coordinates: phi, alpha, psi (degrees) and ln(I_L / I_R).
using PlanVector = std::array<double, 4>;

struct PlanResult {
  Montage montage;
  SymmetricParams params;
  Point3 target;
  double envelope_at_target = 0.0;
  double off_target_peak = 0.0;
  double focality_ratio = 0.0;
  double current_scale = 1.0;  // fraction of the budget actually driven after safety scaling
  double objective = 0.0;      // larger is better
  int evaluations = 0;
  bool refinement_converged = false;  // the last simplex restart improved by <= refine_tolerance
  SafetyReport safety;
  bool converged = false;      // safe and driven with at least min_useful_fraction of the budget
};

/// Resolves a cell target to its xy-cell centroid at the depth band's mid-height.
Point3 resolve_target(const PlanTarget& target, const SphereModel& model, const Segmentation& seg = {});

/// Coarse grid over (phi, alpha, psi, log-ratio) followed by simplex refinement from the
/// best cell. Throws InfeasibleTarget for a D4 target, NoSafeMontage when no candidate can
/// run at min_useful_fraction of the budget, Timeout past the request deadline.
PlanResult plan(const PlanRequest& request, const SphereModel& model);

/// Simplex refinement only, started at `start`; plan() uses it after the coarse stage.
/// The simplex is restarted from the incumbent until a run improves the objective by no
/// more than refine_tolerance; that run's start point is returned, so refining a result
/// again reproduces it.
PlanResult refine_plan(const PlanRequest& request, const SphereModel& model, const PlanVector& start);

/// Objective value of one parameter vector (larger is better), as used by plan().
double plan_objective(const PlanRequest& request, const SphereModel& model, const PlanVector& x);

}  // namespace tifl
