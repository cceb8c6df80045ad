#include <benchmark/benchmark.h>

#include "permcodes/block_codes.hpp"
#include "permcodes/bounds.hpp"
#include "permcodes/cyclic_codes.hpp"
#include "permcodes/random.hpp"

using namespace permcodes;

static void BM_CyclicDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const auto a = canonical_rep(random_permutation(n, rng));
  const auto b = canonical_rep(random_permutation(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(d_cyclic(a, b));
}
BENCHMARK(BM_CyclicDistance)->Arg(8)->Arg(64)->Arg(1024);

static void BM_DeltaKey(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto params = make_params(n, d);
  Rng rng(2);
  const auto s = random_permutation(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(delta_key(s, params));
}
BENCHMARK(BM_DeltaKey)->Args({8, 4})->Args({24, 5})->Args({64, 6});

static void BM_BuildFibers(benchmark::State& state) {
  const auto params = make_params(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_fibers(params).fibers.size());
}
BENCHMARK(BM_BuildFibers)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CertifyBestFiber(benchmark::State& state) {
  const auto book = best_fiber(build_fibers(make_params(static_cast<int>(state.range(0)), 4)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_min_distance(book).pairs);
}
BENCHMARK(BM_CertifyBestFiber)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_SystematicEncode(benchmark::State& state) {
  const SystematicEncoder enc(24, 4);
  Rng rng(3);
  const auto s = random_permutation(24, rng);
  for (auto _ : state) benchmark::DoNotOptimize(enc.encode(s));
}
BENCHMARK(BM_SystematicEncode);

static void BM_SphereProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_profile(n).total());
}
BENCHMARK(BM_SphereProfile)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
