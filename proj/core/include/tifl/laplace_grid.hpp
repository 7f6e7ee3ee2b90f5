#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tifl/geometry.hpp"
#include "tifl/vec3.hpp"

namespace tifl {

struct GridSolveOptions {
  int grid_n = 65;            // cells per axis over [-R, R]
  double tolerance = 1e-8;    // relative residual ||b - A v|| / ||b||
  int max_iterations = 20000;
  double source_width = 1.0;  // Gaussian spread of each electrode over boundary faces, in cells
};

/// Cell-centred finite-volume solution of div(sigma grad V) = 0 on a staircase ball.
///
/// Cells whose centre lies strictly inside the sphere are unknowns. Faces towards
/// outside cells carry no flux (mirrored ghost cells), which is the insulating boundary.
/// Each electrode injects (anode) or withdraws (cathode) its current as flux through the
/// boundary faces around it. The potential is gauge-fixed to zero mean over inside cells.
class GridSolution {
 public:
  int n() const { return n_; }
  double step() const { return h_; }
  const SphereModel& model() const { return model_; }
  int iterations() const { return iterations_; }
  double relative_residual() const { return residual_; }

  std::size_t inside_count() const { return cells_.size(); }
  bool inside(int i, int j, int k) const;
  Point3 cell_center(int i, int j, int k) const;
  /// Potential of an inside cell; throws InvalidArgument for outside cells.
  double potential(int i, int j, int k) const;

  /// Trilinear interpolation between cell centres. Throws OutsideSphere when any of the
  /// eight surrounding cells is outside the ball.
  double interpolate(const Point3& x) const;

  /// Central-difference E = -grad V at an inside cell, one-sided next to the boundary.
  Vec3 field(int i, int j, int k) const;

  /// Net source currents by sign; sum of injected minus withdrawn is zero by construction.
  double injected_current() const { return injected_; }
  double withdrawn_current() const { return withdrawn_; }

  /// Mean of the solution over inside cells (zero up to rounding after gauge fixing).
  double mean_potential() const;

 private:
  friend GridSolution solve_laplace_grid(std::span<const ElectrodePair>, const SphereModel&,
                                         const GridSolveOptions&);
  std::size_t linear(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * n_ + j) * n_ + i;
  }

  SphereModel model_;
  int n_ = 0;
  double h_ = 0.0;
  std::vector<std::int32_t> index_;  // n^3 -> compact cell index or -1
  std::vector<std::int32_t> cells_;  // compact -> linear index
  std::vector<double> potential_;    // compact
  int iterations_ = 0;
  double residual_ = 0.0;
  double injected_ = 0.0;
  double withdrawn_ = 0.0;
};

/// Solves for the combined potential of all `pairs` driven together.
/// Throws InvalidArgument for grid_n < 33 or tolerance <= 0, NoConvergence when the
/// residual is still above tolerance after max_iterations.
GridSolution solve_laplace_grid(std::span<const ElectrodePair> pairs, const SphereModel& model,
                                const GridSolveOptions& options = {});

GridSolution solve_laplace_grid(const ElectrodePair& pair, const SphereModel& model,
                                const GridSolveOptions& options = {});

/// Gauge-invariant relative L2 discrepancy between the grid solution and the analytic
/// potential at `probes`: min_c ||V_grid - V_exact - c|| / ||V_exact - mean(V_exact)||.
double grid_discrepancy(const GridSolution& solution, const ElectrodePair& pair,
                        std::span<const Point3> probes);

/// Deterministic probe set: lattice points with |x| <= 0.8 R and at least `clearance` R
/// from every electrode of `pair`.
std::vector<Point3> interior_probes(const ElectrodePair& pair, const SphereModel& model,
                                    int per_axis = 17, double clearance = 0.2);

}  // namespace tifl
