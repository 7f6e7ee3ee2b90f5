#include "tifl/laplace_grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tifl/error.hpp"
#include "tifl/field.hpp"

namespace tifl {

namespace {

constexpr std::array<std::array<int, 3>, 6> kNeighbours{{
    {{-1, 0, 0}}, {{1, 0, 0}}, {{0, -1, 0}}, {{0, 1, 0}}, {{0, 0, -1}}, {{0, 0, 1}}}};

double dot_n(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void remove_mean(std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

}  // namespace

bool GridSolution::inside(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_) return false;
  return index_[linear(i, j, k)] >= 0;
}

Point3 GridSolution::cell_center(int i, int j, int k) const {
  const double r = model_.radius;
  return {-r + (i + 0.5) * h_, -r + (j + 0.5) * h_, -r + (k + 0.5) * h_};
}

double GridSolution::potential(int i, int j, int k) const {
  if (!inside(i, j, k)) throw Error(ErrorCode::InvalidArgument, "cell is outside the ball");
  return potential_[static_cast<std::size_t>(index_[linear(i, j, k)])];
}

double GridSolution::interpolate(const Point3& x) const {
  const double r = model_.radius;
  const double fi = (x.x + r) / h_ - 0.5;
  const double fj = (x.y + r) / h_ - 0.5;
  const double fk = (x.z + r) / h_ - 0.5;
  const int i0 = static_cast<int>(std::floor(fi));
  const int j0 = static_cast<int>(std::floor(fj));
  const int k0 = static_cast<int>(std::floor(fk));
  const double ti = fi - i0, tj = fj - j0, tk = fk - k0;
  double v = 0.0;
  for (int c = 0; c < 8; ++c) {
    const int di = c & 1, dj = (c >> 1) & 1, dk = (c >> 2) & 1;
    if (!inside(i0 + di, j0 + dj, k0 + dk))
      throw Error(ErrorCode::OutsideSphere, "interpolation stencil leaves the ball");
    const double w = (di ? ti : 1.0 - ti) * (dj ? tj : 1.0 - tj) * (dk ? tk : 1.0 - tk);
    v += w * potential(i0 + di, j0 + dj, k0 + dk);
  }
  return v;
}

Vec3 GridSolution::field(int i, int j, int k) const {
  const std::array<int, 3> c{i, j, k};
  std::array<double, 3> g{};
  for (int axis = 0; axis < 3; ++axis) {
    std::array<int, 3> lo = c, hi = c;
    --lo[axis];
    ++hi[axis];
    const bool has_lo = inside(lo[0], lo[1], lo[2]);
    const bool has_hi = inside(hi[0], hi[1], hi[2]);
    const double centre = potential(i, j, k);
    if (has_lo && has_hi)
      g[axis] = (potential(hi[0], hi[1], hi[2]) - potential(lo[0], lo[1], lo[2])) / (2.0 * h_);
    else if (has_hi)
      g[axis] = (potential(hi[0], hi[1], hi[2]) - centre) / h_;
    else if (has_lo)
      g[axis] = (centre - potential(lo[0], lo[1], lo[2])) / h_;
  }
  return {-g[0], -g[1], -g[2]};
}

double GridSolution::mean_potential() const {
  return std::accumulate(potential_.begin(), potential_.end(), 0.0) /
         static_cast<double>(potential_.size());
}

GridSolution solve_laplace_grid(std::span<const ElectrodePair> pairs, const SphereModel& model,
                                const GridSolveOptions& options) {
  model.validate();
  if (options.grid_n < 33) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 33");
  if (!(options.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (pairs.empty()) throw Error(ErrorCode::InvalidArgument, "no electrode pair to solve for");

  GridSolution sol;
  sol.model_ = model;
  sol.n_ = options.grid_n;
  sol.h_ = 2.0 * model.radius / options.grid_n;
  const int n = sol.n_;
  const std::size_t total = static_cast<std::size_t>(n) * n * n;
  sol.index_.assign(total, -1);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const Point3 c = sol.cell_center(i, j, k);
        if (dot(c, c) < model.radius * model.radius) {
          sol.index_[sol.linear(i, j, k)] = static_cast<std::int32_t>(sol.cells_.size());
          sol.cells_.push_back(static_cast<std::int32_t>(sol.linear(i, j, k)));
        }
      }
  const std::size_t m = sol.cells_.size();

  // Compact neighbour table; -1 marks an insulating face.
  std::vector<std::int32_t> nb(6 * m, -1);
  std::vector<double> degree(m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t lin = static_cast<std::size_t>(sol.cells_[c]);
    const int i = static_cast<int>(lin % n);
    const int j = static_cast<int>((lin / n) % n);
    const int k = static_cast<int>(lin / (static_cast<std::size_t>(n) * n));
    for (int f = 0; f < 6; ++f) {
      const int a = i + kNeighbours[f][0], b = j + kNeighbours[f][1], d = k + kNeighbours[f][2];
      if (sol.inside(a, b, d)) {
        nb[6 * c + f] = sol.index_[sol.linear(a, b, d)];
        degree[c] += 1.0;
      }
    }
  }

  // Boundary faces: an inside cell next to an outside one. The face centre sits half a
  // step from the cell centre, on the staircase surface.
  struct BoundaryFace {
    std::size_t cell;
    Point3 centre;
  };
  std::vector<BoundaryFace> faces;
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t lin = static_cast<std::size_t>(sol.cells_[c]);
    const int i = static_cast<int>(lin % n);
    const int j = static_cast<int>((lin / n) % n);
    const int k = static_cast<int>(lin / (static_cast<std::size_t>(n) * n));
    const Point3 centre = sol.cell_center(i, j, k);
    for (int f = 0; f < 6; ++f) {
      if (nb[6 * c + f] >= 0) continue;
      const Vec3 offset{0.5 * sol.h_ * kNeighbours[f][0], 0.5 * sol.h_ * kNeighbours[f][1],
                        0.5 * sol.h_ * kNeighbours[f][2]};
      faces.push_back({c, centre + offset});
    }
  }

  // Each electrode's current enters through the boundary faces around it with Gaussian
  // weights of width options.source_width * h, normalized to the electrode current.
  const double width = options.source_width * sol.h_;
  auto inject = [&](const ElectrodeSite& site, double current, std::vector<double>& rhs) {
    const Point3 e = site_to_cartesian(site, model);
    std::vector<double> w(faces.size(), 0.0);
    double total_w = 0.0;
    for (std::size_t q = 0; q < faces.size(); ++q) {
      const double d = norm(faces[q].centre - e);
      if (d > 4.0 * width) continue;
      w[q] = std::exp(-0.5 * (d * d) / (width * width));
      total_w += w[q];
    }
    if (total_w == 0.0) throw Error(ErrorCode::InvalidArgument, "electrode has no nearby boundary face");
    for (std::size_t q = 0; q < faces.size(); ++q)
      if (w[q] > 0.0) rhs[faces[q].cell] += current * w[q] / total_w;
  };

  // sigma h sum_nb (V_c - V_nb) = I_c  =>  A v = b with b = I_c / (sigma h).
  std::vector<double> b(m, 0.0);
  for (const ElectrodePair& pair : pairs) {
    inject(pair.anode, pair.current, b);
    inject(pair.cathode, -pair.current, b);
    sol.injected_ += pair.current;
    sol.withdrawn_ += pair.current;
  }
  const double scale = 1.0 / (model.conductivity * sol.h_);
  for (double& x : b) x *= scale;

  auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t c = 0; c < m; ++c) {
      double acc = degree[c] * v[c];
      const std::int32_t* row = &nb[6 * c];
      for (int f = 0; f < 6; ++f)
        if (row[f] >= 0) acc -= v[static_cast<std::size_t>(row[f])];
      out[c] = acc;
    }
  };

  // Conjugate gradients on the mean-zero subspace (A is singular with constant null space).
  std::vector<double> v(m, 0.0), r = b, p, ap(m);
  remove_mean(r);
  p = r;
  const double b_norm = std::sqrt(dot_n(b, b));
  if (b_norm == 0.0) {
    sol.potential_ = std::move(v);
    return sol;
  }
  double rr = dot_n(r, r);
  int it = 0;
  while (std::sqrt(rr) / b_norm > options.tolerance) {
    if (it >= options.max_iterations)
      throw Error(ErrorCode::NoConvergence,
                  "residual above tolerance after " + std::to_string(it) + " iterations");
    apply(p, ap);
    const double alpha = rr / dot_n(p, ap);
    for (std::size_t c = 0; c < m; ++c) {
      v[c] += alpha * p[c];
      r[c] -= alpha * ap[c];
    }
    remove_mean(r);
    const double rr_next = dot_n(r, r);
    const double beta = rr_next / rr;
    for (std::size_t c = 0; c < m; ++c) p[c] = r[c] + beta * p[c];
    rr = rr_next;
    ++it;
  }
  remove_mean(v);

  // Report the true residual, not the recursively updated one.
  apply(v, ap);
  double res = 0.0;
  for (std::size_t c = 0; c < m; ++c) res += (b[c] - ap[c]) * (b[c] - ap[c]);
  sol.residual_ = std::sqrt(res) / b_norm;
  sol.iterations_ = it;
  sol.potential_ = std::move(v);
  return sol;
}

GridSolution solve_laplace_grid(const ElectrodePair& pair, const SphereModel& model,
                                const GridSolveOptions& options) {
  return solve_laplace_grid(std::span<const ElectrodePair>(&pair, 1), model, options);
}

double grid_discrepancy(const GridSolution& solution, const ElectrodePair& pair,
                        std::span<const Point3> probes) {
  if (probes.empty()) throw Error(ErrorCode::InvalidArgument, "no probes");
  std::vector<double> diff, exact;
  diff.reserve(probes.size());
  exact.reserve(probes.size());
  for (const Point3& x : probes) {
    const double ve = pair_potential(x, pair, solution.model());
    exact.push_back(ve);
    diff.push_back(solution.interpolate(x) - ve);
  }
  const double np = static_cast<double>(probes.size());
  const double mean_diff = std::accumulate(diff.begin(), diff.end(), 0.0) / np;
  const double mean_exact = std::accumulate(exact.begin(), exact.end(), 0.0) / np;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    num += (diff[i] - mean_diff) * (diff[i] - mean_diff);
    den += (exact[i] - mean_exact) * (exact[i] - mean_exact);
  }
  return std::sqrt(num / den);
}

std::vector<Point3> interior_probes(const ElectrodePair& pair, const SphereModel& model, int per_axis,
                                    double clearance) {
  const Point3 a = site_to_cartesian(pair.anode, model);
  const Point3 c = site_to_cartesian(pair.cathode, model);
  const double r = model.radius;
  std::vector<Point3> out;
  for (int k = 0; k < per_axis; ++k)
    for (int j = 0; j < per_axis; ++j)
      for (int i = 0; i < per_axis; ++i) {
        const auto coord = [&](int q) { return -0.8 * r + 1.6 * r * q / (per_axis - 1); };
        const Point3 p{coord(i), coord(j), coord(k)};
        if (norm(p) > 0.8 * r) continue;
        if (norm(p - a) < clearance * r || norm(p - c) < clearance * r) continue;
        out.push_back(p);
      }
  return out;
}

}  // namespace tifl
