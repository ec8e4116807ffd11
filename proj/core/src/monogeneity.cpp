#include "monogen/monogeneity.hpp"

#include <algorithm>

#include "monogen/finite_field.hpp"

namespace monogen {

std::string to_string(PrimeCase c) {
  switch (c) {
    case PrimeCase::I: return "i";
    case PrimeCase::II: return "ii";
    case PrimeCase::III: return "iii";
    case PrimeCase::IVa: return "iv-a";
    case PrimeCase::IVb: return "iv-b";
    case PrimeCase::V: return "v";
    case PrimeCase::VI: return "vi";
    case PrimeCase::VII: return "vii";
  }
  return "?";
}

std::string to_string(MonogeneityStatus s) {
  switch (s) {
    case MonogeneityStatus::Monogenic: return "Monogenic";
    case MonogeneityStatus::NotMonogenic: return "NotMonogenic";
    case MonogeneityStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

bool divides(const Integer& p, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

// (b^(p^e) - b) / p mod p.
Integer fermat_quotient(const Integer& b, const Integer& p, unsigned long e) {
  const Integer p2 = p * p;
  Integer r = powmod(b, pow(p, e), p2);
  Integer diff = mod(r - b, p2);
  ensure(divides(p, diff), "fermat quotient not integral");
  return diff / p;
}

IntPoly case_v_t_poly(const FamilyParams& prm, const Integer& p, unsigned long pj, unsigned long s_prime) {
  std::vector<Integer> coeffs(s_prime * (pj - 1) + 1, Integer(0));
  for (unsigned long i = 0; i < pj; ++i) coeffs[s_prime * i] = binomial(pj, i) * pow(prm.c(), pj - i);
  coeffs[0] -= prm.c();
  return IntPoly(std::move(coeffs)).divide_exact(p);
}

}  // namespace

bool divides_discriminant(const FamilyParams& prm, const Integer& p) {
  if (prm.k() * (prm.m() - 1) > 0 && divides(p, prm.a())) return true;
  if (prm.m() * (prm.n() - 1) > 0 && divides(p, prm.c())) return true;
  return divides(p, compute_cee(prm).difference());
}

PrimeVerdict classify_prime(const FamilyParams& prm, const Integer& p) {
  require(is_prime(p), "classify_prime: p must be prime");
  require(divides_discriminant(prm, p), "classify_prime: p does not divide the discriminant");
  const Integer& a = prm.a();
  const Integer& c = prm.c();
  const unsigned long k = prm.k(), m = prm.m(), n = prm.n(), km = k * m;
  const bool pc = divides(p, c), pa = divides(p, a);
  const bool pk = divides(p, Integer(k)), pm = divides(p, Integer(m));
  PrimeVerdict v;
  v.p = p;

  if (pc && pa) {
    v.case_label = PrimeCase::I;
    v.witnesses["vp_c"] = Integer(vp_unchecked(c, p));
    v.passes = m == 1 && !divides(p * p, c);
    return v;
  }
  if (pc && n == 1) {
    v.case_label = PrimeCase::II;
    const unsigned long j = vp_unchecked(Integer(km - 1), p);
    ensure(j >= 1, "case ii: p must divide km - 1");
    const Integer c2 = c / p;
    const Integer a1 = fermat_quotient(a, p, j);
    v.witnesses = {{"j", Integer(j)}, {"c2", c2}, {"a1", a1}};
    if (divides(p, c2) && !divides(p, a1)) {
      v.passes = true;
      return v;
    }
    Integer bracket = powmod(a, Integer(k), p) * powmod(a1, Integer(km - 1), p) -
                      powmod(Integer(-Integer(m) * a * c2), Integer(km - 1), p);
    v.passes = !divides(p, c2) && !divides(p, bracket);
    return v;
  }
  if (pc) {
    v.case_label = PrimeCase::III;
    if (m >= 2) {
      v.passes = false;
      return v;
    }
    const unsigned long l = vp_unchecked(Integer(k - n), p);
    const Integer c2 = c / p;
    const Integer a1 = l == 0 ? Integer(0) : fermat_quotient(a, p, l);
    v.witnesses = {{"l", Integer(l)}, {"c2", c2}, {"a1", a1}};
    if (divides(p, a1) && !divides(p, c2)) {
      v.passes = true;
      return v;
    }
    const unsigned long d = prm.k1() - prm.n1();
    Integer bracket = powmod(a, Integer(prm.n1()), p) * powmod(a1, Integer(d), p) - powmod(Integer(-c2), Integer(d), p);
    Integer whole = a1 * powmod(c2, Integer(n - 1), p) * bracket;
    v.passes = !divides(p, whole);
    return v;
  }
  if (pa) {
    if (m >= 2) {
      v.case_label = PrimeCase::IVa;
      v.passes = !divides(p * p, a);
      return v;
    }
    v.case_label = PrimeCase::IVb;
    const unsigned long l = vp_unchecked(Integer(k), p);
    ensure(l >= 1, "case iv-b: p must divide k");
    const Integer a2 = -a / p;
    const Integer c1 = fermat_quotient(Integer(-c), p, l);
    v.witnesses = {{"l", Integer(l)}, {"a2", a2}, {"c1", c1}};
    if (divides(p, a2) && !divides(p, c1)) {
      v.passes = true;
      return v;
    }
    Integer bracket = powmod(a2, Integer(prm.k1()), p) * powmod(Integer(-c), Integer(prm.n1()), p) -
                      powmod(Integer(-c1), Integer(prm.k1()), p);
    v.passes = !divides(p, Integer(a2 * bracket));
    return v;
  }
  if (pk) {
    v.case_label = PrimeCase::V;
    ensure(divides(p, Integer(n)), "case v: p must divide n");
    ensure(p.fits_ulong_p(), "case v: p divides k, so it is small");
    const unsigned long j = std::min(vp_unchecked(Integer(k), p), vp_unchecked(Integer(n), p));
    const unsigned long pj = pow(p, j).get_ui();
    const unsigned long s_prime = k / pj, s = n / pj;
    const Integer a1 = fermat_quotient(a, p, j);
    IntPoly t = case_v_t_poly(prm, p, pj, s_prime);
    v.witnesses = {{"j", Integer(j)}, {"s", Integer(s)}, {"s_prime", Integer(s_prime)}, {"a1", a1}};
    v.t_poly = t;
    PrimeField F(p);
    IntPoly xk_c = IntPoly::monomial(1, k) + IntPoly::constant(c);
    IntPoly lhs = IntPoly::monomial(a1, n) - Integer(m) * t * xk_c.pow(m - 1);
    IntPoly rhs = (IntPoly::monomial(1, s_prime) + IntPoly::constant(c)).pow(m) - IntPoly::monomial(a, s);
    ModPoly g = gcd(reduce(lhs, F), reduce(rhs, F));
    v.passes = g.degree() == 0;
    return v;
  }
  if (pm) {
    v.case_label = PrimeCase::VI;
    ensure(divides(p, Integer(n)), "case vi: p must divide n");
    v.passes = !divides(p * p, Integer(pow(a, p.get_ui()) - a));
    return v;
  }
  v.case_label = PrimeCase::VII;
  Integer diff = compute_cee(prm).difference();
  v.witnesses["vp_cee"] = Integer(vp_unchecked(diff, p));
  v.passes = !divides(p * p, diff);
  return v;
}

namespace {

void require_irreducible(const IntPoly& f, const IrreducibilityBudget& budget, std::string& method) {
  IrreducibilityResult r = irreducible_over_Q(f, budget);
  method = r.method;
  if (r.verdict == Irreducibility::Reducible)
    throw ReducibleInputError("polynomial is reducible: " + f.to_string(), r.witness.value_or(IntPoly{}));
  if (r.verdict == Irreducibility::Unknown) throw UndecidedError("irreducibility undecided within budget");
}

}  // namespace

MonogeneityResult is_monogenic(const FamilyParams& prm, const MonogeneityOptions& options) {
  MonogeneityResult out;
  require_irreducible(build_poly(prm), options.irreducibility, out.irreducibility_method);
  out.discriminant = factor_discriminant(prm, options.factor);
  for (const auto& [p, e] : out.discriminant.factors) {
    PrimeVerdict v = classify_prime(prm, p);
    const bool pass = v.passes;
    out.per_prime.push_back(std::move(v));
    if (!pass && !out.failing_prime) {
      out.failing_prime = p;
      out.status = MonogeneityStatus::NotMonogenic;
      if (options.short_circuit) return out;
    }
  }
  if (!out.failing_prime)
    out.status = out.discriminant.complete() ? MonogeneityStatus::Monogenic : MonogeneityStatus::Unknown;
  return out;
}

MonogeneityResult binomial_family_check(const Integer& q, unsigned long j, unsigned long m, unsigned long n,
                                        const Integer& a, int sign, const FactorBudget& budget) {
  require(is_prime(q), "binomial_family_check: q must be prime");
  require(j >= 1, "binomial_family_check: j >= 1 required");
  require(m >= 2, "binomial_family_check: m >= 2 required");
  require(sign == 1 || sign == -1, "binomial_family_check: sign must be +1 or -1");
  require(divides(q, a), "binomial_family_check: q must divide a");
  require(!divides(q * q, a), "binomial_family_check: q^2 divides a");
  require(q.fits_ulong_p(), "binomial_family_check: q too large");
  const Integer k = pow(q, j);
  require(k.fits_ulong_p(), "binomial_family_check: q^j too large");
  FamilyParams prm(k.get_ui(), m, n, a, Integer(sign));

  MonogeneityResult out;
  // f(x + t) reduces to x^(km) mod q with constant term of q-adic valuation 1.
  const Integer shift = sign == 1 ? Integer(-1) : Integer(1);
  ensure(is_eisenstein(build_poly(prm).shift(shift), q), "binomial family: Eisenstein shift failed");
  out.irreducibility_method = "eisenstein p=" + q.get_str() + " shift=" + shift.get_str();

  out.discriminant = factor_discriminant(prm, budget);
  const Integer diff = compute_cee(prm).difference();
  for (const auto& [p, e] : out.discriminant.factors) {
    PrimeVerdict v;
    v.p = p;
    if (divides(p, a)) {
      v.case_label = PrimeCase::IVa;
      v.witnesses["condition"] = 1;
      v.passes = !divides(p * p, a);
    } else if (divides(p, Integer(m))) {
      v.case_label = PrimeCase::VI;
      v.witnesses["condition"] = 2;
      v.passes = divides(p, Integer(n)) && !divides(p * p, Integer(pow(a, p.get_ui()) - a));
    } else {
      v.case_label = PrimeCase::VII;
      v.witnesses["condition"] = 3;
      v.passes = !divides(p * p, diff);
    }
    const bool pass = v.passes;
    out.per_prime.push_back(std::move(v));
    if (!pass) {
      out.failing_prime = p;
      out.status = MonogeneityStatus::NotMonogenic;
      return out;
    }
  }
  out.status = out.discriminant.complete() ? MonogeneityStatus::Monogenic : MonogeneityStatus::Unknown;
  return out;
}

RepeatedRootWitness repeated_root_witness(const FamilyParams& prm, const Integer& p) {
  require(is_prime(p), "repeated_root_witness: p must be prime");
  const unsigned long km = prm.k() * prm.m();
  // p | n makes alpha1 vanish mod p, so alpha is undefined for u1 < 0; such p never divide C - E.
  const Integer guard =
      prm.a() * prm.c() * Integer(prm.k()) * Integer(prm.m()) * Integer(prm.n()) * Integer(km - prm.n());
  require(!divides(p, guard), "repeated_root_witness: p divides a c k m n (km - n)");
  const Integer p2 = p * p;
  RepeatedRootWitness w;
  w.p = p;
  const Integer inv_q = *invmod(Integer(km - prm.n()), p2);
  w.alpha1 = mod(Integer(prm.n()) * prm.c() * inv_q, p2);
  w.alpha2 = mod(*invmod(prm.a(), p2) * powmod(Integer(km) * prm.c() * inv_q, Integer(prm.m()), p2), p2);
  Egcd e = egcd(Integer(prm.k()), Integer(prm.n()));
  ensure(e.g == prm.t(), "extended gcd mismatch");
  w.u1 = e.u;
  w.u2 = e.v;
  w.alpha = mod(powmod(w.alpha1, w.u1, p2) * powmod(w.alpha2, w.u2, p2), p2);
  w.p_divides_cee = divides(p, compute_cee(prm).difference());
  if (w.p_divides_cee) {
    if (prm.t() == 1) {
      w.beta = mod(w.alpha, p);
    } else {
      PrimeField F(p);
      ModPoly g = ModPoly::monomial(F, 1, prm.t()) - ModPoly::constant(F, F.from_integer(w.alpha));
      for (const auto& [h, mult] : factor_mod_p(g).factors) {
        if (h.degree() != 1) continue;
        Integer root = F.neg(h.coeff(0));
        if (!w.beta || root < *w.beta) w.beta = root;
      }
    }
  }
  return w;
}

bool alpha_vanishes_mod_p2(const FamilyParams& prm, const RepeatedRootWitness& w) {
  const Integer p2 = w.p * w.p;
  Integer inner = powmod(w.alpha, Integer(prm.k1()), p2) + prm.c();
  Integer val = powmod(inner, Integer(prm.m()), p2) - prm.a() * powmod(w.alpha, Integer(prm.n1()), p2);
  return mod(val, p2) == 0;
}

}  // namespace monogen
