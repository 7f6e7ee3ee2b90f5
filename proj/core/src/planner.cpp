#include "tifl/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tifl/envelope.hpp"
#include "tifl/error.hpp"
#include "tifl/field.hpp"
#include "tifl/nelder_mead.hpp"
#include "tifl/parallel.hpp"

namespace tifl {

namespace {

constexpr double kFocalityWeight = 1e3;
constexpr double kShortfallWeight = 1e6;
constexpr double kDomainWeight = 10.0;
constexpr double kPhiMin = 5.0;
constexpr double kPhiMax = 135.0;
constexpr double kAlphaMin = 5.0;
constexpr double kAlphaMax = 170.0;
constexpr double kPsiMargin = 0.5;  // keeps both right sites strictly on the +x side

void check_deadline(const PlanRequest& req) {
  if (req.deadline && std::chrono::steady_clock::now() > *req.deadline)
    throw Error(ErrorCode::Timeout, "planning deadline exceeded");
}

// Clamped copy of x and its distance from the feasible box.
std::pair<PlanVector, double> clamp_to_domain(const PlanVector& x, const SearchEffort& effort) {
  PlanVector c = x;
  c[0] = std::clamp(c[0], kPhiMin, kPhiMax);
  c[1] = std::clamp(c[1], kAlphaMin, kAlphaMax);
  const double psi_max = 90.0 - kPsiMargin - 0.5 * c[1];
  c[2] = std::clamp(c[2], -psi_max, psi_max);
  c[3] = std::clamp(c[3], std::log(effort.ratio_min), std::log(effort.ratio_max));
  double dist = 0.0;
  for (std::size_t i = 0; i < 4; ++i) dist += std::abs(c[i] - x[i]);
  return {c, dist};
}

// Unit-current fields of one electrode geometry; ratio and scale only multiply them.
struct UnitFields {
  Vec3 target_right, target_left;
  std::vector<Vec3> right, left;  // over the off-target subset of the lattice
  double max_right = 0.0, max_left = 0.0;  // over the whole lattice
};

struct Score {
  double objective = 0.0;
  double envelope_at_target = 0.0;
  double off_target_peak = 0.0;
  double scale = 1.0;
};

class Objective {
 public:
  Objective(const PlanRequest& req, const SphereModel& model, const Point3& target)
      : req_(req), model_(model), target_(target) {
    lattice_ = interior_lattice(model, req.effort.sample_resolution);
    const double excl = req.exclusion_radius * model.radius;
    for (std::size_t i = 0; i < lattice_.size(); ++i)
      if (norm(lattice_[i] - target) > excl) off_index_.push_back(i);
    unit_ = 1.0 / (4.0 * kPi * model.conductivity * model.radius * model.radius);
  }

  UnitFields unit_fields(double phi, double alpha, double psi) const {
    check_deadline(req_);
    const Montage m = make_symmetric_montage({phi, alpha, psi, 1.0, 1.0, req_.f1, req_.f2});
    const PairEvaluator right(m.right, model_), left(m.left, model_);
    UnitFields u;
    u.target_right = right.efield(target_);
    u.target_left = left.efield(target_);
    std::vector<char> off(lattice_.size(), 0);
    for (auto i : off_index_) off[i] = 1;
    u.right.reserve(off_index_.size());
    u.left.reserve(off_index_.size());
    for (std::size_t i = 0; i < lattice_.size(); ++i) {
      const Vec3 a = right.efield(lattice_[i]);
      const Vec3 b = left.efield(lattice_[i]);
      u.max_right = std::max(u.max_right, norm(a));
      u.max_left = std::max(u.max_left, norm(b));
      if (off[i]) {
        u.right.push_back(a);
        u.left.push_back(b);
      }
    }
    return u;
  }

  // Fraction of the budget that can be driven within every limit.
  double safe_scale(const UnitFields& u, double log_ratio) const {
    const double b = req_.total_current_budget;
    const double r = std::exp(log_ratio);
    const double i_right = b / (1.0 + r);
    const double i_left = b * r / (1.0 + r);
    double s = 1.0;
    const double pair_max = std::max(i_left, i_right);
    if (pair_max > req_.limits.max_current_per_pair) s = std::min(s, req_.limits.max_current_per_pair / pair_max);
    if (b > req_.limits.max_total_current) s = std::min(s, req_.limits.max_total_current / b);
    const double field = s * std::max(i_right * u.max_right, i_left * u.max_left);
    if (field > req_.limits.max_field_anywhere) s *= req_.limits.max_field_anywhere / field * (1.0 - 1e-12);
    return s;
  }

  Score score(const UnitFields& u, double log_ratio) const {
    const double b = req_.total_current_budget;
    const double r = std::exp(log_ratio);
    Score sc;
    sc.scale = safe_scale(u, log_ratio);
    const double driven = b * sc.scale;
    const double c_right = driven / (1.0 + r);
    const double c_left = driven * r / (1.0 + r);
    sc.envelope_at_target = envelope_max(u.target_right * c_right, u.target_left * c_left);
    for (std::size_t i = 0; i < u.right.size(); ++i)
      sc.off_target_peak = std::max(sc.off_target_peak, envelope_max(u.right[i] * c_right, u.left[i] * c_left));
    const double focality = sc.off_target_peak > 0.0 ? sc.envelope_at_target / sc.off_target_peak
                                                     : std::numeric_limits<double>::infinity();
    sc.objective = sc.envelope_at_target / (b * unit_) -
                   kFocalityWeight * std::max(0.0, req_.focality_goal - focality) -
                   kShortfallWeight * std::max(0.0, req_.min_useful_fraction - sc.scale);
    return sc;
  }

  Score evaluate(const PlanVector& x) const {
    const auto [c, dist] = clamp_to_domain(x, req_.effort);
    Score sc = score(unit_fields(c[0], c[1], c[2]), c[3]);
    sc.objective -= kDomainWeight * dist;
    return sc;
  }

 private:
  const PlanRequest& req_;
  const SphereModel& model_;
  Point3 target_;
  std::vector<Point3> lattice_;
  std::vector<std::size_t> off_index_;
  double unit_ = 1.0;
};

PlanResult finalize(const PlanRequest& req, const SphereModel& model, const Objective& obj, const PlanVector& x,
                    const Point3& target) {
  const PlanVector c = clamp_to_domain(x, req.effort).first;
  const UnitFields u = obj.unit_fields(c[0], c[1], c[2]);
  const Score sc = obj.score(u, c[3]);
  const double r = std::exp(c[3]);
  const double driven = req.total_current_budget * sc.scale;

  PlanResult out;
  out.params = {c[0], c[1], c[2], driven * r / (1.0 + r), driven / (1.0 + r), req.f1, req.f2};
  out.montage = make_symmetric_montage(out.params);
  out.target = target;
  out.envelope_at_target = sc.envelope_at_target;
  out.off_target_peak = sc.off_target_peak;
  out.focality_ratio = sc.off_target_peak > 0.0 ? sc.envelope_at_target / sc.off_target_peak
                                                : std::numeric_limits<double>::infinity();
  out.current_scale = sc.scale;
  out.objective = sc.objective;
  out.safety = check_safety(out.montage, model, req.limits, req.effort.sample_resolution);
  out.converged = out.safety.pass && sc.scale >= req.min_useful_fraction;
  return out;
}

Point3 checked_target(const PlanRequest& req, const SphereModel& model) {
  const Point3 t = resolve_target(req.target, model, req.segmentation);
  if (classify_depth_xz(t, model, req.segmentation.bands) == DepthLabel::D4)
    throw Error(ErrorCode::InfeasibleTarget, "targets in D4 are outside the reachable set");
  return t;
}

}  // namespace

void SafetyLimits::validate() const {
  if (!(max_field_anywhere > 0.0) || !(max_current_per_pair > 0.0) || !(max_total_current > 0.0))
    throw Error(ErrorCode::InvalidArgument, "safety limits must be positive");
}

void PlanRequest::validate() const {
  limits.validate();
  if (!(total_current_budget > 0.0)) throw Error(ErrorCode::InvalidArgument, "current budget must be positive");
  if (!(focality_goal >= 0.0)) throw Error(ErrorCode::InvalidArgument, "focality goal must be non-negative");
  if (!(exclusion_radius >= 0.0 && exclusion_radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "exclusion radius must be in [0, 1)");
  if (!(min_useful_fraction > 0.0 && min_useful_fraction <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "min useful fraction must be in (0, 1]");
  if (f1 == f2) throw Error(ErrorCode::DegenerateFrequencies, "f1 and f2 must differ");
  if (effort.phi.empty() || effort.alpha.empty() || effort.psi_steps < 1 || effort.ratio_steps < 1)
    throw Error(ErrorCode::InvalidArgument, "search grids must be non-empty");
  if (!(effort.ratio_min > 0.0 && effort.ratio_min <= effort.ratio_max))
    throw Error(ErrorCode::InvalidArgument, "ratio range must be positive and ordered");
  if (effort.sample_resolution < 5) throw Error(ErrorCode::InvalidArgument, "sample resolution must be >= 5");
  if (effort.refine_evaluations < 0 || effort.refine_restarts < 0)
    throw Error(ErrorCode::InvalidArgument, "refine evaluations and restarts must be >= 0");
}

std::vector<Point3> interior_lattice(const SphereModel& model, int resolution, double shell) {
  if (resolution < 2) throw Error(ErrorCode::InvalidArgument, "lattice resolution must be >= 2");
  const double h = shell * model.radius;
  const double lim2 = h * h * (1.0 + 1e-12);
  std::vector<Point3> pts;
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j)
      for (int k = 0; k < resolution; ++k) {
        const auto c = [&](int a) { return -h + 2.0 * h * a / (resolution - 1); };
        const Point3 p{c(k), c(j), c(i)};
        if (dot(p, p) <= lim2) pts.push_back(p);
      }
  return pts;
}

SafetyReport check_safety(const Montage& montage, const SphereModel& model, const SafetyLimits& limits,
                          int resolution) {
  limits.validate();
  model.validate();
  const double i_right = montage.right.current;
  const double i_left = montage.left.current;
  if (i_right < 0.0 || i_left < 0.0) throw Error(ErrorCode::InvalidArgument, "currents must be non-negative");

  double field = 0.0;
  const PairEvaluator right(montage.right, model), left(montage.left, model);
  for (const auto& p : interior_lattice(model, resolution)) {
    if (i_right > 0.0) field = std::max(field, norm(right.efield(p)));
    if (i_left > 0.0) field = std::max(field, norm(left.efield(p)));
  }

  SafetyReport rep;
  auto add = [&](std::string name, double limit, double measured) {
    SafetyCheck c{std::move(name), limit, measured, limit - measured, measured <= limit};
    rep.pass = rep.pass && c.pass;
    rep.checks.push_back(std::move(c));
  };
  add("current_right", limits.max_current_per_pair, i_right);
  add("current_left", limits.max_current_per_pair, i_left);
  add("current_total", limits.max_total_current, i_right + i_left);
  add("field_anywhere", limits.max_field_anywhere, field);
  return rep;
}

Point3 resolve_target(const PlanTarget& target, const SphereModel& model, const Segmentation& seg) {
  model.validate();
  Point3 p;
  if (const auto* pt = std::get_if<Point3>(&target)) {
    p = *pt;
  } else {
    const auto& [region, depth] = std::get<std::pair<RegionLabel, DepthLabel>>(target);
    if (region.row < 1 || region.row > 3 || region.col < 1 || region.col > 3)
      throw Error(ErrorCode::InvalidArgument, "region indices must be in 1..3");
    const double z = depth_band_center(depth, model, seg.bands);
    const double disc = std::sqrt(model.radius * model.radius - z * z);
    p = region_centroid(region, disc, seg.partition, model.radius);
    p.z = z;
  }
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
    throw Error(ErrorCode::InvalidArgument, "target must be finite");
  if (norm(p) >= model.radius) throw Error(ErrorCode::OutsideSphere, "target must lie inside the sphere");
  return p;
}

double plan_objective(const PlanRequest& request, const SphereModel& model, const PlanVector& x) {
  request.validate();
  const Point3 t = checked_target(request, model);
  return Objective(request, model, t).evaluate(x).objective;
}

PlanResult refine_plan(const PlanRequest& request, const SphereModel& model, const PlanVector& start) {
  request.validate();
  const Point3 t = checked_target(request, model);
  const Objective obj(request, model, t);
  const PlanVector steps{10.0, 10.0, 7.5, std::log(request.effort.ratio_max / request.effort.ratio_min) / 8.0};
  const std::function<double(const PlanVector&)> f = [&](const PlanVector& x) { return -obj.evaluate(x).objective; };
  const auto& e = request.effort;
  PlanVector x = start;
  double best = f(x);
  int evaluations = 1;
  bool converged = false;
  for (int run = 0; run <= e.refine_restarts; ++run) {
    const auto nm = nelder_mead<4>(f, x, steps, e.refine_evaluations, e.refine_tolerance);
    evaluations += nm.evaluations;
    if (best - nm.value <= e.refine_tolerance) {
      converged = true;
      break;
    }
    x = nm.x;
    best = nm.value;
  }
  PlanResult out = finalize(request, model, obj, x, t);
  out.evaluations = evaluations;
  out.refinement_converged = converged;
  return out;
}

PlanResult plan(const PlanRequest& request, const SphereModel& model) {
  request.validate();
  const Point3 t = checked_target(request, model);
  const Objective obj(request, model, t);
  const SearchEffort& e = request.effort;

  struct Geometry {
    double phi, alpha, psi;
  };
  std::vector<Geometry> geoms;
  for (double phi : e.phi)
    for (double alpha : e.alpha)
      for (int k = 0; k < e.psi_steps; ++k) {
        const double psi = -90.0 + (k + 0.5) * 180.0 / e.psi_steps;
        if (std::abs(psi) + 0.5 * alpha < 90.0) geoms.push_back({phi, alpha, psi});
      }
  std::vector<double> log_ratios;
  const double lo = std::log(e.ratio_min), hi = std::log(e.ratio_max);
  for (int k = 0; k < e.ratio_steps; ++k)
    log_ratios.push_back(e.ratio_steps == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (e.ratio_steps - 1));
  if (geoms.empty()) throw Error(ErrorCode::InvalidArgument, "coarse grid has no admissible montage");

  const std::size_t nr = log_ratios.size();
  std::vector<Score> scores(geoms.size() * nr);
  parallel_for(geoms.size(), [&](std::size_t g) {
    const UnitFields u = obj.unit_fields(geoms[g].phi, geoms[g].alpha, geoms[g].psi);
    for (std::size_t k = 0; k < nr; ++k) scores[g * nr + k] = obj.score(u, log_ratios[k]);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i)
    if (scores[i].objective > scores[best].objective) best = i;
  if (scores[best].scale < request.min_useful_fraction)
    throw Error(ErrorCode::NoSafeMontage, "no candidate meets the limits at the minimum useful current");

  const Geometry& g = geoms[best / nr];
  const PlanVector start{g.phi, g.alpha, g.psi, log_ratios[best % nr]};
  PlanResult out = refine_plan(request, model, start);
  out.evaluations += static_cast<int>(scores.size());
  return out;
}

}  // namespace tifl
