#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>

namespace tifl {

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes f with the reflection / expansion / contraction / shrink simplex method.
/// Stops when the spread of simplex values falls below `tolerance` (absolute) or after
/// `max_evaluations`. Deterministic: ties keep the earlier vertex.
template <std::size_t N>
SimplexResult<N> nelder_mead(const std::function<double(const std::array<double, N>&)>& f,
                             const std::array<double, N>& start, const std::array<double, N>& steps,
                             int max_evaluations, double tolerance) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> simplex;
  std::array<double, N + 1> values;
  int evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    return f(p);
  };

  simplex[0] = start;
  values[0] = eval(start);
  for (std::size_t i = 0; i < N; ++i) {
    simplex[i + 1] = start;
    simplex[i + 1][i] += steps[i];
    values[i + 1] = eval(simplex[i + 1]);
  }

  std::array<std::size_t, N + 1> order;
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[N - 1];
    if (values[worst] - values[best] <= tolerance) {
      converged = true;
      break;
    }
    if (evals >= max_evaluations) break;

    Point centroid{};
    for (std::size_t k = 0; k < N; ++k) {
      const Point& p = simplex[order[k]];
      for (std::size_t d = 0; d < N; ++d) centroid[d] += p[d] / static_cast<double>(N);
    }
    auto along = [&](double t) {
      Point p;
      for (std::size_t d = 0; d < N; ++d) p[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
      return p;
    };

    const Point reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      const Point expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Point contracted = along(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= N; ++k) {
      Point& p = simplex[order[k]];
      for (std::size_t d = 0; d < N; ++d) p[d] = simplex[best][d] + 0.5 * (p[d] - simplex[best][d]);
      values[order[k]] = eval(p);
    }
  }

  SimplexResult<N> r;
  r.x = simplex[order.front()];
  r.value = values[order.front()];
  r.evaluations = evals;
  r.converged = converged;
  return r;
}

}  // namespace tifl
