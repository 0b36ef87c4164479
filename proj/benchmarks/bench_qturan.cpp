#include <benchmark/benchmark.h>

#include "qturan/bessel.hpp"
#include "qturan/chern.hpp"
#include "qturan/nu.hpp"
#include "qturan/partitions.hpp"
#include "qturan/turan.hpp"

using namespace qturan;

static void BM_QTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(q_table(state.range(0)));
}
BENCHMARK(BM_QTable)->Arg(1000)->Arg(5000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_BesselI1(benchmark::State& state) {
  const Enclosure s = Enclosure::from_long(state.range(0), 256);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_i1(s));
}
BENCHMARK(BM_BesselI1)->Arg(26)->Arg(100)->Arg(1000);

static void BM_AHat(benchmark::State& state) {
  const EtaQuotient eq = EtaQuotient::distinct_parts();
  for (auto _ : state) benchmark::DoNotOptimize(a_hat(eq, state.range(0), 1000, kDefaultPrecision));
}
BENCHMARK(BM_AHat)->Arg(7)->Arg(49)->Arg(97);

static void BM_ChernSum(benchmark::State& state) {
  const EtaQuotient eq = EtaQuotient::distinct_parts();
  const long n = state.range(0);
  const long N = default_truncation(eq, n);
  for (auto _ : state) benchmark::DoNotOptimize(chern_truncated_sum(eq, n, N, kDefaultPrecision));
}
BENCHMARK(BM_ChernSum)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_ThresholdScan(benchmark::State& state) {
  const PartitionTable t = q_table(5003);
  for (auto _ : state) {
    benchmark::DoNotOptimize(threshold_scan(TuranPredicate::IPositive, t, 5000, state.range(0)));
  }
}
BENCHMARK(BM_ThresholdScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
