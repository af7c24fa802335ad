#include <benchmark/benchmark.h>

#include <random>

#include "mwall/amalgam.hpp"
#include "mwall/cube.hpp"
#include "mwall/hyperbolic.hpp"

namespace {

using namespace mwall;

void BM_BallFreeAbelian(benchmark::State& state) {
  auto m = GroupModel::free_abelian(3);
  for (auto _ : state) benchmark::DoNotOptimize(ball(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BallFreeAbelian)->Arg(4)->Arg(8)->Arg(10);

void BM_BallFree(benchmark::State& state) {
  auto m = GroupModel::free_group(2);
  for (auto _ : state) benchmark::DoNotOptimize(ball(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BallFree)->Arg(4)->Arg(6)->Arg(8);

void BM_CubingPseudometric(benchmark::State& state) {
  auto w = standard_cubing(3);
  Point a = lattice_point({0, 0, 0}), b = lattice_point({7, -3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(w.pseudometric(a, b));
}
BENCHMARK(BM_CubingPseudometric);

void BM_AmalgamPseudometric(benchmark::State& state) {
  AmalgamWallspace aw(load_spec(std::string(MWALL_FIXTURE_DIR) + "/z2-amalgam.json"), 8);
  auto trunc = aw.truncation(1);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> node(0, trunc.nodes.size() - 1);
  std::uniform_int_distribution<std::int64_t> coord(-4, 4);
  std::vector<std::pair<AmalgamPoint, AmalgamPoint>> pairs;
  for (int i = 0; i < 64; ++i)
    pairs.emplace_back(aw.point(trunc.nodes[node(rng)], lattice_point({coord(rng), coord(rng)})),
                       aw.point(trunc.nodes[node(rng)], lattice_point({coord(rng), coord(rng)})));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(aw.pseudometric(a, b));
  }
}
BENCHMARK(BM_AmalgamPseudometric);

void BM_CrossingMeasure(benchmark::State& state) {
  auto m = hyp::calibrate();
  auto x = hyp::HPoint::at(0, 0);
  auto y = hyp::point_at(x, static_cast<double>(state.range(0)), 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(hyp::crossing_measure(m, x, y));
}
BENCHMARK(BM_CrossingMeasure)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
