#include <benchmark/benchmark.h>

#include "monogen/counting.hpp"
#include "monogen/family.hpp"
#include "monogen/monogeneity.hpp"
#include "monogen/newton.hpp"

using namespace monogen;

namespace {

void BM_DiscriminantClosed(benchmark::State& state) {
  const FamilyParams prm(5, 6, 11, Integer(21), Integer(3));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_closed(prm));
}
BENCHMARK(BM_DiscriminantClosed)->Unit(benchmark::kMicrosecond);

void BM_DiscriminantOracle(benchmark::State& state) {
  const FamilyParams prm(5, 6, 11, Integer(21), Integer(3));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_oracle(build_poly(prm)));
}
BENCHMARK(BM_DiscriminantOracle)->Unit(benchmark::kMillisecond);

void BM_IsMonogenic(benchmark::State& state) {
  const FamilyParams prm(2, static_cast<unsigned long>(state.range(0)), 1, Integer(2), Integer(1));
  for (auto _ : state) benchmark::DoNotOptimize(is_monogenic(prm));
}
BENCHMARK(BM_IsMonogenic)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SplittingType(benchmark::State& state) {
  const IntPoly f = build_poly(FamilyParams(1, 6, 2, Integer(6), Integer(25)));
  for (auto _ : state) benchmark::DoNotOptimize(splitting_type(f, Integer(5)));
}
BENCHMARK(BM_SplittingType)->Unit(benchmark::kMicrosecond);

void BM_EnumerateFamily(benchmark::State& state) {
  const FamilyCountSpec spec(Integer(2), 3, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_monogenic_family(spec, Integer(state.range(0))));
}
BENCHMARK(BM_EnumerateFamily)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
