// Serial reference kernel against the OpenMP kernel, plus the attack itself.
//
//   ./bench_kernels --benchmark_filter=MatMul

#include <benchmark/benchmark.h>

#include "tropattack/attack.hpp"
#include "tropattack/matrix.hpp"
#include "tropattack/rng.hpp"
#include "tropattack/protocol.hpp"

namespace {

using namespace tropattack;

TropMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_trop_matrix(rng, n, -100, 100, 0.1);
}

void BM_MatMulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul_serial(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_MatMulParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul_parallel(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_MatPow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropMatrix a = random_matrix(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(a, std::uint64_t{1} << 20));
}

void BM_RecoverKey(benchmark::State& state) {
  ProtocolParams p;
  p.n = static_cast<std::size_t>(state.range(0));
  p.seed = 5;
  const Instance inst = generate_instance(p);
  for (auto _ : state) benchmark::DoNotOptimize(recover_key(inst.transcript));
}

}  // namespace

BENCHMARK(BM_MatMulSerial)->RangeMultiplier(2)->Range(8, 256)->Complexity();
BENCHMARK(BM_MatMulParallel)->RangeMultiplier(2)->Range(8, 256)->Complexity();
BENCHMARK(BM_MatPow)->DenseRange(6, 18, 6);
BENCHMARK(BM_RecoverKey)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
