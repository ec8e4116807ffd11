#include <benchmark/benchmark.h>

#include "monogen/finite_field.hpp"
#include "monogen/int_poly.hpp"
#include "monogen/irreducibility.hpp"

using namespace monogen;

namespace {

IntPoly dense(long degree, long salt) {
  std::vector<Integer> c;
  for (long i = 0; i <= degree; ++i) c.emplace_back((i * 7919 + salt * 104729) % 201 - 100);
  c.back() = 1;
  return IntPoly(c);
}

void BM_Resultant(benchmark::State& state) {
  const IntPoly f = dense(state.range(0), 1), g = dense(state.range(0) - 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_FactorModP(benchmark::State& state) {
  const PrimeField F{Integer(1000003)};
  const ModPoly f = reduce(dense(state.range(0), 3), F);
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(f));
}
BENCHMARK(BM_FactorModP)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_IrreducibleOverQ(benchmark::State& state) {
  const IntPoly f = dense(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_over_Q(f));
}
BENCHMARK(BM_IrreducibleOverQ)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

}  // namespace
