#include "monogen/galois.hpp"

#include "monogen/monogeneity.hpp"
#include "monogen/newton.hpp"

namespace monogen {

namespace {

bool divides(const Integer& p, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

std::optional<bool> is_square(const FactoredInteger& d) {
  if (d.sign < 0) return false;
  for (const auto& [p, e] : d.factors)
    if (e % 2 == 1) return false;
  if (!d.complete()) return std::nullopt;
  return true;
}

}  // namespace

std::string to_string(GaloisGroupVerdict v) {
  switch (v) {
    case GaloisGroupVerdict::SymmetricGroup: return "SymmetricGroup";
    case GaloisGroupVerdict::ContainsAlternating: return "ContainsAlternating";
    case GaloisGroupVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

bool newton_edge_check(const FamilyParams& prm, const Integer& p) {
  require(is_prime(p), "newton_edge_check: p must be prime");
  require(divides(p, prm.c()) && divides(p, prm.a()), "newton_edge_check: p must divide a and c");
  require(!divides(p * p, prm.a()), "newton_edge_check: p^2 divides a");
  const long km = static_cast<long>(prm.degree()), n = static_cast<long>(prm.n());
  require(is_prime(Integer(km - n)), "newton_edge_check: km - n must be prime");
  NewtonPolygonData np = newton_polygon(build_poly(prm), IntPoly::x(), p);
  for (const auto& s : np.sides) {
    if (s.start == n && s.start_height == 1 && s.end() == km && s.end_height() == 0)
      return s.e == km - n && s.h == 1;
  }
  return false;
}

GaloisVerdict galois_group_check(const FamilyParams& prm, const FactorBudget& budget,
                                 const IrreducibilityBudget& irreducibility) {
  const IntPoly f = build_poly(prm);
  IrreducibilityResult ir = irreducible_over_Q(f, irreducibility);
  if (ir.verdict == Irreducibility::Reducible)
    throw ReducibleInputError("polynomial is reducible: " + f.to_string(), ir.witness.value_or(IntPoly{}));
  if (ir.verdict == Irreducibility::Unknown) throw UndecidedError("irreducibility undecided within budget");

  GaloisVerdict out;
  const unsigned long k = prm.k(), m = prm.m(), n = prm.n();
  out.degree = prm.degree();
  const long d = static_cast<long>(out.degree);
  out.q = d - static_cast<long>(n);
  out.q_prime = is_prime(Integer(out.q));
  out.q_in_interval = 2 * out.q > d && out.q + 2 < d;
  out.certificate.push_back({"q = km - n prime", out.q_prime, "q=" + std::to_string(out.q)});
  out.certificate.push_back({"d/2 < q < d - 2", out.q_in_interval,
                             std::to_string(d) + "/2 < " + std::to_string(out.q) + " < " + std::to_string(d - 2)});

  const Integer ac = gcd(prm.a(), prm.c());
  if (ac != 1) {
    for (const auto& p : factor_integer(ac, budget).primes()) {
      if (!divides(p * p, prm.a())) {
        out.p = p;
        break;
      }
    }
  }
  out.certificate.push_back(
      {"p | c, p | a, p^2 does not divide a", out.p.has_value(), out.p ? "p=" + out.p->get_str() : "none"});
  if (out.p && out.q_prime) out.edge_verified = newton_edge_check(prm, *out.p);
  out.certificate.push_back({"edge (n,1)-(km,0) at p", out.edge_verified,
                             "length " + std::to_string(out.q) + ", slope -1/" + std::to_string(out.q)});

  out.parity_value = k * (m - 1);
  const bool odd_parity = out.parity_value % 2 == 1;
  out.certificate.push_back({"k(m-1) odd", odd_parity, "k(m-1)=" + std::to_string(out.parity_value)});

  const Integer kmc = Integer(k) * Integer(m) * prm.c();
  const Integer cee = compute_cee(prm).difference();
  FactoredInteger fa = factor_integer(prm.a(), budget);
  for (const auto& [l, e] : fa.factors) {
    if (e % 2 == 1 && !divides(l, kmc)) {
      ensure(!divides(l, cee), "galois: ell divides C - E");
      out.ell = l;
      out.v_ell_a = e;
      break;
    }
  }
  out.certificate.push_back({"v_ell(a) odd, ell does not divide kmc", out.ell.has_value(),
                             out.ell ? "ell=" + out.ell->get_str() + ", v_ell(a)=" + std::to_string(out.v_ell_a)
                                     : "none"});

  out.discriminant_square = is_square(factor_discriminant(prm, budget));
  const std::string sq = !out.discriminant_square ? "undecided" : (*out.discriminant_square ? "square" : "not a square");
  out.certificate.push_back({"discriminant not a square", out.discriminant_square == false, sq});

  const bool hajir = out.q_prime && out.q_in_interval && out.p && out.edge_verified;
  if (hajir && odd_parity && out.ell && out.discriminant_square == false) {
    // v_ell(D_f) = k(m-1) v_ell(a), odd by the two clauses.
    const Integer disc = discriminant_closed(prm);
    ensure(vp_unchecked(disc, *out.ell) % 2 == 1, "galois: v_ell of the discriminant is even");
    out.verdict = GaloisGroupVerdict::SymmetricGroup;
  } else if (hajir && out.discriminant_square == true) {
    out.verdict = GaloisGroupVerdict::ContainsAlternating;
  }
  return out;
}

}  // namespace monogen
