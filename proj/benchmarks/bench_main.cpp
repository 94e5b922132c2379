#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "tatecoh/formation.hpp"
#include "tatecoh/smith.hpp"
#include "tatecoh/tate.hpp"

using namespace tatecoh;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(d(rng));
  return m;
}

ResolutionPtr resolution(const FiniteGroup& g, Engine e, int window) {
  return std::make_shared<const CompleteResolution>(make_complete_resolution(g, e, window));
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

void BM_BarResolution(benchmark::State& state) {
  const FiniteGroup g = make_symmetric(3);
  for (auto _ : state) benchmark::DoNotOptimize(CompleteResolution(bar_resolution(g, static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_BarResolution)->DenseRange(2, 5);

void BM_TateCyclicPeriodic(benchmark::State& state) {
  const FiniteGroup g = make_cyclic(static_cast<std::size_t>(state.range(0)));
  const GComplex z = concentrate(trivial_cyclic_module(g), 0);
  const ResolutionPtr x = resolution(g, Engine::Periodic, 5);
  for (auto _ : state) benchmark::DoNotOptimize(TateCohomology(x, z, -4, 4));
}
BENCHMARK(BM_TateCyclicPeriodic)->Arg(2)->Arg(6)->Arg(12)->Arg(24);

void BM_TateCyclicBar(benchmark::State& state) {
  const FiniteGroup g = make_cyclic(static_cast<std::size_t>(state.range(0)));
  const GComplex z = concentrate(trivial_cyclic_module(g), 0);
  const ResolutionPtr x = resolution(g, Engine::Bar, 5);
  for (auto _ : state) benchmark::DoNotOptimize(TateCohomology(x, z, -4, 4));
}
BENCHMARK(BM_TateCyclicBar)->Arg(2)->Arg(4)->Arg(6);

void BM_TateSymmetricRegular(benchmark::State& state) {
  const FiniteGroup g = make_symmetric(3);
  const GComplex c = concentrate(regular_module(g), 0);
  const ResolutionPtr x = resolution(g, Engine::Bar, 4);
  for (auto _ : state) benchmark::DoNotOptimize(TateCohomology(x, c, -3, 3));
}
BENCHMARK(BM_TateSymmetricRegular);

void BM_CupWithFundamentalClass(benchmark::State& state) {
  const FiniteGroup g = make_cyclic(static_cast<std::size_t>(state.range(0)));
  const GComplex z = concentrate(trivial_cyclic_module(g), 0);
  const ResolutionPtr x = resolution(g, Engine::Periodic, 5);
  const TateCohomology zc(x, z, -4, 1), cc(x, z, -2, 3);
  const IntVector u{Integer(1)};
  for (auto _ : state)
    for (int q = -2; q <= 3; ++q) benchmark::DoNotOptimize(cup_with(zc, cc, u, q));
}
BENCHMARK(BM_CupWithFundamentalClass)->Arg(2)->Arg(4)->Arg(6);

void BM_ClassFormation(benchmark::State& state) {
  const bool symmetric = state.range(0) == 0;
  const FiniteGroup g = symmetric ? make_symmetric(3) : make_cyclic(12);
  const GComplex c = concentrate(trivial_cyclic_module(g), symmetric ? 2 : 0);
  const ResolutionPtr x = resolution(g, Engine::Auto, symmetric ? 4 : 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_class_formation(x, c));
  state.SetLabel(symmetric ? "S_3, Z in degree 2" : "Z/12, Z");
}
BENCHMARK(BM_ClassFormation)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
