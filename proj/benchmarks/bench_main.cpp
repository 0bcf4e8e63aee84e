#include "repsq/classifier.hpp"
#include "repsq/multibase.hpp"
#include "repsq/sieve.hpp"
#include "repsq/table_b.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Isqrt(benchmark::State& state) {
  const repsq::Natural n = repsq::pow_natural(10, static_cast<unsigned>(state.range(0))) + 12345;
  for (auto _ : state) benchmark::DoNotOptimize(repsq::isqrt(n));
}
BENCHMARK(BM_Isqrt)->Arg(18)->Arg(38)->Arg(100)->Arg(1000);

void BM_SquaresMod(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(repsq::squares_mod(m).size());
}
BENCHMARK(BM_SquaresMod)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_SieveFamily(benchmark::State& state) {
  const repsq::CaseFamily f{8, 3, 2};
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(repsq::sieve_family(f, m).eliminated_class_count());
}
BENCHMARK(BM_SieveFamily)->Arg(9973)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const auto pool = repsq::default_modulus_pool();
  for (auto _ : state)
    benchmark::DoNotOptimize(repsq::certify_family(repsq::CaseFamily{4, 7, 2}, pool, 200).direct_checked);
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_MordellScan(benchmark::State& state) {
  const repsq::Natural N("440992160000");
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(repsq::search_integer_points(N, bound).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_MordellScan)->Arg(100'000)->Arg(2'000'000)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(repsq::enumerate_solutions(len, 10).solutions.size());
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Explore7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(repsq::explore(7, 13).size());
}
BENCHMARK(BM_Explore7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
