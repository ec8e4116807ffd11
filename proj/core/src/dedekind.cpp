#include "monogen/dedekind.hpp"

#include "monogen/family.hpp"

namespace monogen {

DedekindReport dedekind_divides_index(const IntPoly& f, const Integer& p) {
  require(f.is_monic(), "dedekind: f must be monic");
  require(is_prime(p), "dedekind: p must be prime");
  PrimeField k(p);
  DedekindReport r{p, factor_mod_p(reduce(f, k)), ModPoly(k), false, std::nullopt};

  IntPoly prod = IntPoly::constant(1);
  for (const auto& [g, e] : r.factorization.factors) prod *= lift(g).pow(e);
  IntPoly diff = f - prod;
  for (const auto& c : diff.coeffs())
    ensure(mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()), "dedekind: f - prod g_i^e_i not divisible by p");
  r.M = reduce(diff.divide_exact(p), k);

  for (const auto& [g, e] : r.factorization.factors) {
    if (e < 2) continue;
    if (rem(r.M, g).is_zero()) {
      r.divides_index = true;
      r.offending_factor = g;
      break;
    }
  }
  return r;
}

IndexSupport index_prime_support(const IntPoly& f, const FactoredInteger& disc) {
  require(f.is_monic(), "index_prime_support: f must be monic");
  if (disc.value() != discriminant_oracle(f))
    throw PreconditionError("index_prime_support: factorization does not match the discriminant");
  IndexSupport out;
  for (const auto& [p, e] : disc.factors) out.verdicts[p] = e >= 2 ? dedekind_divides_index(f, p).divides_index : false;
  out.complete = disc.complete();
  out.cofactor = disc.cofactor;
  return out;
}

}  // namespace monogen
