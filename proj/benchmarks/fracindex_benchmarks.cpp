#include <benchmark/benchmark.h>

#include <random>

#include "fracindex/index_engine.hpp"
#include "fracindex/lab/experiments.hpp"
#include "fracindex/lab/heat.hpp"
#include "fracindex/manifold.hpp"

namespace {

using namespace fracindex;

void BM_GenusSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genus_series(Genus::kAHat, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenusSeries)->Arg(8)->Arg(16)->Arg(32);

void BM_AHatProjectiveSpace(benchmark::State& state) {
  const ManifoldModel m = cp(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integrate(a_hat_class(m)));
}
BENCHMARK(BM_AHatProjectiveSpace)->Arg(2)->Arg(4)->Arg(8);

void BM_HypersurfaceGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 1; d <= 6; ++d) benchmark::DoNotOptimize(integrate(a_hat_class(hypersurface(n, 2 * d + 1))));
    }
  }
}
BENCHMARK(BM_HypersurfaceGrid)->Unit(benchmark::kMillisecond);

void BM_ProductToddIdentity(benchmark::State& state) {
  const ManifoldModel m = product(cp(3), cp(3));
  for (auto _ : state) benchmark::DoNotOptimize(todd_class(m) == a_hat_class(m) * exp_class(m.c1() * Rational(1, 2)));
}
BENCHMARK(BM_ProductToddIdentity)->Unit(benchmark::kMillisecond);

void BM_MonomialIndex(benchmark::State& state) {
  lab::LabOptions options;
  options.truncation = static_cast<int>(state.range(0));
  const auto a = lab::LoopSymbol::monomial(3);
  for (auto _ : state) benchmark::DoNotOptimize(lab::symbol_index(a, options));
}
BENCHMARK(BM_MonomialIndex)->Arg(64)->Arg(256);

void BM_PerturbedIndex(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto a = lab::random_perturbed_symbol(rng, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lab::symbol_index(a));
}
BENCHMARK(BM_PerturbedIndex)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_McKeanSinger(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto d = lab::random_graded_operator(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lab::mckean_singer_check(d));
}
BENCHMARK(BM_McKeanSinger)->Arg(12)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
