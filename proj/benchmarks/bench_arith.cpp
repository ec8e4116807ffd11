#include <benchmark/benchmark.h>

#include "monogen/arith.hpp"

using namespace monogen;

namespace {

// Product of two primes just above 2^(bits/2), the hardest case for rho at a given size.
Integer semiprime(unsigned bits) {
  Integer base = Integer(1) << (bits / 2);
  Integer p, q;
  mpz_nextprime(p.get_mpz_t(), base.get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), p.get_mpz_t());
  return p * q;
}

void BM_FactorSemiprime(benchmark::State& state) {
  const Integer n = semiprime(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factor_integer(n));
}
BENCHMARK(BM_FactorSemiprime)->Arg(32)->Arg(48)->Arg(64)->Arg(80)->Unit(benchmark::kMicrosecond);

void BM_Primality(benchmark::State& state) {
  Integer p, base = Integer(1) << static_cast<unsigned long>(state.range(0));
  mpz_nextprime(p.get_mpz_t(), base.get_mpz_t());
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(p));
}
BENCHMARK(BM_Primality)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_PrimesUpTo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(primes_up_to(static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_PrimesUpTo)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

}  // namespace
