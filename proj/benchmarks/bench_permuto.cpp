#include <benchmark/benchmark.h>

#include "permuto/permuto.hpp"

namespace {

using namespace permuto;

void BM_MuClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = 0; k <= n; ++k) benchmark::DoNotOptimize(mu_closed(k, n));
  }
}
BENCHMARK(BM_MuClosed)->Arg(10)->Arg(30)->Arg(64);

void BM_MuBruteforce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mu_bruteforce(n / 2, n));
}
BENCHMARK(BM_MuBruteforce)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ChernPairings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EvaluationPoint t = EvaluationPoint::standard(n);
  for (auto _ : state) benchmark::DoNotOptimize(chern_pairings(n, t));
}
BENCHMARK(BM_ChernPairings)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_ChernPairingsBigInt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<BigRational> coords;
  for (int j = 1; j <= n + 1; ++j) coords.emplace_back(BigInt(1) << (10 * j));
  const EvaluationPoint t(std::move(coords));
  for (auto _ : state) benchmark::DoNotOptimize(chern_pairings(n, t));
}
BENCHMARK(BM_ChernPairingsBigInt)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_NetCountEnumerated(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BlockProfile p{1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(net_count_enumerated(p, {n, 4, 4}));
}
BENCHMARK(BM_NetCountEnumerated)->DenseRange(8, 12, 2);

void BM_CountCones(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_cones(n, n / 2));
}
BENCHMARK(BM_CountCones)->DenseRange(5, 8);

}  // namespace

BENCHMARK_MAIN();
