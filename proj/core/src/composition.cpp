#include "monogen/composition.hpp"

#include "monogen/dedekind.hpp"

namespace monogen {

namespace {

bool divides(const Integer& p, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

bool congruent_mod(const IntPoly& a, const IntPoly& b, const Integer& p) {
  const IntPoly d = a - b;
  for (const auto& c : d.coeffs())
    if (!divides(p, c)) return false;
  return true;
}

}  // namespace

std::optional<std::set<Integer>> exceptional_primes(const FamilyParams& prm, const FactoredInteger& disc) {
  if (!disc.complete()) return std::nullopt;
  const Integer cakm = prm.c() * prm.a() * Integer(prm.k()) * Integer(prm.m());
  std::set<Integer> out;
  for (const auto& [p, e] : disc.factors) {
    if (!divides(p, cakm)) {
      out.insert(p);
    } else if (prm.m() == 1 && divides(p, prm.c())) {
      const Integer guard = prm.a() * Integer(prm.k() - prm.n());
      if (!divides(p, guard)) out.insert(p);
    }
  }
  return out;
}

CompositionCase make_composition_case(const FamilyParams& prm, const IntPoly& g, const FactorBudget& budget) {
  require(g.degree() >= 1, "composition: g must be nonconstant");
  FactoredInteger disc = factor_discriminant(prm, budget);
  auto ex = exceptional_primes(prm, disc);
  if (!ex) throw UndecidedError("composition: discriminant of f not fully factored within budget");
  return CompositionCase{prm, g, compose(build_poly(prm), g), disc, *ex};
}

HypothesisReport composition_hypotheses(const CompositionCase& cc, const IrreducibilityBudget& budget) {
  IrreducibilityResult ir = irreducible_over_Q(cc.T.primitive_part(), budget);
  if (ir.verdict == Irreducibility::Reducible)
    throw ReducibleInputError("composition: T is reducible", ir.witness.value_or(IntPoly{}));
  if (ir.verdict == Irreducibility::Unknown) throw UndecidedError("composition: irreducibility of T undecided");

  HypothesisReport rep;
  auto add = [&rep](std::string name, bool ok, std::optional<Integer> p = std::nullopt) {
    HypothesisClause cl{std::move(name), ok, std::move(p)};
    if (!ok && rep.holds) {
      rep.holds = false;
      rep.first_failure = cl;
    }
    rep.clauses.push_back(std::move(cl));
  };

  const FamilyParams& prm = cc.params;
  const Integer ca = prm.c() * prm.a();
  bool rad_ok = true;
  std::optional<Integer> rad_bad;
  for (const auto& q : factor_integer(Integer(prm.k())).primes()) {
    if (!divides(q, ca)) {
      rad_ok = false;
      rad_bad = q;
      break;
    }
  }
  add("rad(k) | ca", rad_ok, rad_bad);

  const unsigned long d = static_cast<unsigned long>(cc.g.degree());
  const IntPoly target = IntPoly::monomial(Integer(d), d - 1);
  for (const auto& p : cc.exceptional) {
    add("p | g(0)", divides(p, cc.g.coeff(0)), p);
    add("p does not divide d", !divides(p, Integer(d)), p);
    add("g' = d x^(d-1) mod p", congruent_mod(cc.g.derivative(), target, p), p);
  }
  if (prm.n() == 1) {
    const Integer dg = discriminant_oracle(cc.g);
    for (const auto& [p, e] : cc.disc_f.factors) {
      if (divides(p, prm.c()) && !divides(p, prm.a())) add("p does not divide D_g", !divides(p, dg), p);
    }
  }
  return rep;
}

CompositionResult composition_monogenic(const CompositionCase& cc, const CompositionOptions& options) {
  require(cc.g.is_monic(), "composition_monogenic: g must be monic");
  CompositionResult out;
  out.hypotheses = composition_hypotheses(cc, options.monogeneity.irreducibility);
  if (!out.hypotheses.holds) {
    const auto& f = *out.hypotheses.first_failure;
    throw PreconditionError("composition hypotheses fail: " + f.name +
                            (f.prime ? " at p=" + f.prime->get_str() : std::string()));
  }
  for (const auto& [p, e] : cc.disc_f.factors) {
    CompositionPrime cp{p, classify_prime(cc.params, p), dedekind_divides_index(cc.T, p).divides_index};
    if (cp.T_divides_index && !out.failing_prime) out.failing_prime = p;
    out.per_prime.push_back(std::move(cp));
  }
  out.status = out.failing_prime ? MonogeneityStatus::NotMonogenic : MonogeneityStatus::Monogenic;

  MonogeneityOptions mo = options.monogeneity;
  mo.short_circuit = true;
  out.f_status = is_monogenic(cc.params, mo).status;

  if (options.report_uncovered) {
    // Every prime of D_T outside D_f divides Res(T, g') since f and g are monic.
    FactoredInteger r = factor_integer(resultant(cc.T, cc.g.derivative()), options.monogeneity.factor);
    for (const auto& p : r.primes())
      if (!cc.disc_f.factors.count(p)) out.not_covered.push_back(p);
    out.not_covered_complete = r.complete();
  }
  return out;
}

CompositionDiscriminant discriminant_composition(const IntPoly& f, const IntPoly& g) {
  require(f.degree() >= 1 && g.degree() >= 1, "discriminant_composition: nonconstant inputs required");
  const IntPoly T = compose(f, g);
  CompositionDiscriminant out;
  out.value = discriminant_oracle(T);
  const long n = f.degree(), m = g.degree();
  const long be = n * (m * n - m - 1);
  Integer num = pow(f.lead(), static_cast<unsigned long>(m - 1)) * pow(discriminant_oracle(f), static_cast<unsigned long>(m)) *
                resultant(T, g.derivative());
  num = abs(num);
  const Integer bpow = pow(abs(g.lead()), static_cast<unsigned long>(std::abs(be)));
  if (be >= 0) {
    out.closed_magnitude = num * bpow;
    out.magnitude_agrees = out.closed_magnitude == abs(out.value);
  } else {
    out.closed_magnitude = divides(bpow, num) ? Integer(num / bpow) : Integer(0);
    out.magnitude_agrees = abs(out.value) * bpow == num;
  }
  return out;
}

}  // namespace monogen
