#include <benchmark/benchmark.h>

#include <vector>

#include "hilbert/hilbert.hpp"

namespace {

using hilbert::AffineFunctional;
using hilbert::Polytope;

/// [-1, 1]^n as 2n facets.
Polytope cube(std::size_t n) {
  std::vector<AffineFunctional> facets;
  for (std::size_t j = 0; j < n; ++j) {
    hilbert::Vector e(n, 0.0);
    e[j] = 1.0;
    facets.push_back({e, 1.0});
    e[j] = -1.0;
    facets.push_back({e, 1.0});
  }
  return Polytope::validate(std::move(facets), n);
}

void BM_Validate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cube(n));
}
BENCHMARK(BM_Validate)->DenseRange(2, 8, 2);

void BM_Distance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polytope p = cube(n);
  const auto pts = hilbert::sample_interior(p, 64, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert::distance(p, pts[i % 64], pts[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Distance)->DenseRange(2, 8, 2);

void BM_Embed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polytope p = cube(n);
  const auto pts = hilbert::sample_interior(p, 64, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::embed(p, pts[i++ % 64]));
}
BENCHMARK(BM_Embed)->DenseRange(2, 8, 2);

void BM_Invert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polytope p = cube(n);
  const auto pts = hilbert::sample_interior(p, 64, 3);
  std::vector<hilbert::EmbeddedPoint> targets;
  for (const auto& x : pts) targets.push_back(hilbert::embed(p, x));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::invert(p, targets[i++ % 64]));
}
BENCHMARK(BM_Invert)->DenseRange(2, 8, 2);

void BM_PathLength(benchmark::State& state) {
  const Polytope p = cube(3);
  const auto pts = hilbert::sample_interior(p, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::path_length(p, pts));
}
BENCHMARK(BM_PathLength);

void BM_EmpiricalDistortion(benchmark::State& state) {
  const Polytope p = cube(3);
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert::empirical_distortion(p, 2000, 7, {threads}));
  }
}
BENCHMARK(BM_EmpiricalDistortion)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SimpleCp(benchmark::State& state) {
  const Polytope p = cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::simple_cp_constant(p));
}
BENCHMARK(BM_SimpleCp)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
