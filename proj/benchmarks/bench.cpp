#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tifl/envelope.hpp"
#include "tifl/field.hpp"
#include "tifl/geometry.hpp"
#include "tifl/laplace_grid.hpp"
#include "tifl/planner.hpp"

namespace {

const tifl::SphereModel kModel{};

std::vector<tifl::Point3> probes(std::size_t count) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::vector<tifl::Point3> out;
  while (out.size() < count) {
    const tifl::Point3 p{u(rng), u(rng), u(rng)};
    if (tifl::norm(p) < 0.8) out.push_back(p * kModel.radius);
  }
  return out;
}

void BM_PairEfield(benchmark::State& state) {
  const auto montage = tifl::make_symmetric_montage(90, 40, 0, 1, 1);
  const auto pts = probes(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tifl::pair_efield(pts[i++ & 1023], montage.right, kModel));
  }
}
BENCHMARK(BM_PairEfield);

void BM_PotentialSeries(benchmark::State& state) {
  const auto montage = tifl::make_symmetric_montage(90, 40, 0, 1, 1);
  const auto pts = probes(1024);
  const int terms = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tifl::pair_potential_series(pts[i++ & 1023], montage.right, kModel, terms));
  }
}
BENCHMARK(BM_PotentialSeries)->Arg(64)->Arg(512);

void BM_EnvelopeMax(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  std::vector<std::pair<tifl::Vec3, tifl::Vec3>> pairs(1024);
  for (auto& [a, b] : pairs) {
    a = {g(rng), g(rng), g(rng)};
    b = {g(rng), g(rng), g(rng)};
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(tifl::envelope_max(a, b));
  }
}
BENCHMARK(BM_EnvelopeMax);

void BM_EnvelopePlane(benchmark::State& state) {
  const auto montage = tifl::make_symmetric_montage(60, 40, 0, 1, 1);
  tifl::PlaneSpec spec;
  spec.plane = tifl::Plane::XZ;
  spec.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tifl::envelope_plane(montage, kModel, spec));
  }
}
BENCHMARK(BM_EnvelopePlane)->Arg(101)->Arg(257)->Unit(benchmark::kMillisecond);

void BM_GridSolve(benchmark::State& state) {
  const auto montage = tifl::make_symmetric_montage(90, 40, 0, 1, 1);
  tifl::GridSolveOptions options;
  options.grid_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto sol = tifl::solve_laplace_grid(montage.right, kModel, options);
    state.counters["iterations"] = sol.iterations();
  }
}
BENCHMARK(BM_GridSolve)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

void BM_PlanCell(benchmark::State& state) {
  tifl::PlanRequest req;
  req.target = std::pair{tifl::RegionLabel{2, 3}, tifl::DepthLabel::D2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tifl::plan(req, kModel));
  }
}
BENCHMARK(BM_PlanCell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
