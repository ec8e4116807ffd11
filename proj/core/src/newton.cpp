#include "monogen/newton.hpp"

#include <algorithm>
#include <numeric>

#include "monogen/irreducibility.hpp"
#include "monogen/monogeneity.hpp"

namespace monogen {

namespace {

bool divides(const Integer& p, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

// Quotient and remainder by a monic divisor over Z.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b) {
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly(), a};
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(a.degree() - db + 1, Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    const Integer t = r[i];
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    q[i - db] = t;
  }
  r.resize(db);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

void check_phi(const IntPoly& phi, const Integer& p) {
  require(is_prime(p), "phi expansion: p must be prime");
  require(phi.degree() >= 1 && phi.is_monic(), "phi expansion: phi must be monic and nonconstant");
  PrimeField F(p);
  require(is_irreducible(reduce(phi, F)), "phi expansion: phi must be irreducible mod p");
}

Side make_side(const LatticePoint& a, const LatticePoint& b) {
  Side s;
  s.start = a.i;
  s.start_height = a.v;
  s.length = b.i - a.i;
  const long drop = a.v - b.v;
  const long g = std::gcd(std::abs(drop), s.length);
  s.h = drop / g;
  s.e = s.length / g;
  return s;
}

}  // namespace

IntPoly PhiExpansion::reconstruct() const {
  IntPoly out;
  for (std::size_t i = coefficients.size(); i-- > 0;) out = out * phi + coefficients[i];
  return out;
}

PhiExpansion phi_expansion(const IntPoly& g, const IntPoly& phi, const Integer& p) {
  check_phi(phi, p);
  PhiExpansion out{p, phi, {}};
  IntPoly rest = g;
  while (!rest.is_zero()) {
    auto [q, r] = divrem_monic(rest, phi);
    out.coefficients.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

Valuation gauss_valuation(const IntPoly& a, const Integer& p) {
  if (a.is_zero()) return Valuation::infinite();
  unsigned long best = 0;
  bool first = true;
  for (const auto& c : a.coeffs()) {
    if (c == 0) continue;
    const unsigned long v = vp_unchecked(c, p);
    if (first || v < best) best = v;
    first = false;
  }
  return Valuation::finite(best);
}

long NewtonPolygonData::principal_length() const {
  long total = 0;
  for (const auto& s : principal) total += s.length;
  return total;
}

NewtonPolygonData newton_polygon(const PhiExpansion& ex) {
  NewtonPolygonData out;
  out.p = ex.p;
  out.phi = ex.phi;
  for (std::size_t i = 0; i < ex.coefficients.size(); ++i) {
    Valuation v = gauss_valuation(ex.coefficients[i], ex.p);
    if (v.is_infinite()) continue;
    out.points.push_back({static_cast<long>(i), static_cast<long>(v.value())});
  }
  // Monotone chain; collinear interior points are dropped from the vertex list.
  for (const auto& pt : out.points) {
    while (out.hull.size() >= 2) {
      const auto& a = out.hull[out.hull.size() - 2];
      const auto& b = out.hull.back();
      const long cross = (b.i - a.i) * (pt.v - a.v) - (b.v - a.v) * (pt.i - a.i);
      if (cross > 0) break;
      out.hull.pop_back();
    }
    out.hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < out.hull.size(); ++i) {
    Side s = make_side(out.hull[i], out.hull[i + 1]);
    out.sides.push_back(s);
    if (s.h > 0) out.principal.push_back(s);
  }
  return out;
}

NewtonPolygonData newton_polygon(const IntPoly& g, const IntPoly& phi, const Integer& p) {
  return newton_polygon(phi_expansion(g, phi, p));
}

std::vector<ResidualData> residual_polynomials(const NewtonPolygonData& npd, const PhiExpansion& ex) {
  PrimeField F(npd.p);
  ExtensionField K(reduce(npd.phi, F));
  std::vector<ResidualData> out;
  for (const auto& side : npd.principal) {
    ResidualData rd{side, ExtFieldPoly(K), {}};
    std::vector<ModPoly> cs;
    for (long i = 0; i <= side.degree(); ++i) {
      const long abscissa = side.start + i * side.e;
      const long height = side.start_height - i * side.h;
      const IntPoly& a = ex.coefficients[abscissa];
      Valuation v = gauss_valuation(a, npd.p);
      const bool on = !v.is_infinite() && static_cast<long>(v.value()) == height;
      rd.on_side.push_back(on);
      if (on)
        cs.push_back(K.from_base(reduce(a.divide_exact(pow(npd.p, static_cast<unsigned long>(height))), F)));
      else
        cs.push_back(K.zero());
    }
    rd.R = ExtFieldPoly(K, std::move(cs));
    ensure(rd.R.degree() == side.degree(), "residual polynomial degree mismatch");
    out.push_back(std::move(rd));
  }
  return out;
}

unsigned long phi_index(const NewtonPolygonData& npd) {
  unsigned long count = 0;
  for (std::size_t si = 0; si < npd.principal.size(); ++si) {
    const Side& s = npd.principal[si];
    // An interior vertex is counted with the side on its left.
    const long first = si == 0 ? std::max(1L, s.start) : s.start + 1;
    for (long x = first; x <= s.end(); ++x) {
      const long num = s.start_height * s.e - (x - s.start) * s.h;
      if (num >= s.e) count += static_cast<unsigned long>(num / s.e);
    }
  }
  return count * static_cast<unsigned long>(npd.phi.degree());
}

bool PhiFactorReport::regular() const {
  return std::all_of(side_squarefree.begin(), side_squarefree.end(), [](bool b) { return b; });
}

RegularityReport is_p_regular(const IntPoly& f, const Integer& p) {
  require(f.is_monic(), "is_p_regular: f must be monic");
  require(is_prime(p), "is_p_regular: p must be prime");
  PrimeField F(p);
  RegularityReport out;
  out.p = p;
  for (const auto& [g, mult] : factor_mod_p(reduce(f, F)).factors) {
    IntPoly phi = lift(g);
    if (mult == 1) {
      out.simple.push_back(phi);
      continue;
    }
    PhiFactorReport rep;
    rep.phi = phi;
    rep.multiplicity = mult;
    PhiExpansion ex = phi_expansion(f, phi, p);
    require(!ex.coefficients.front().is_zero(), "is_p_regular: a factor mod p divides f over Z");
    rep.polygon = newton_polygon(ex);
    ensure(rep.polygon.principal_length() == static_cast<long>(mult), "principal length differs from multiplicity");
    rep.residuals = residual_polynomials(rep.polygon, ex);
    for (const auto& rd : rep.residuals) rep.side_squarefree.push_back(gcd(rd.R, rd.R.derivative()).degree() == 0);
    rep.index = phi_index(rep.polygon);
    if (!rep.regular()) out.regular = false;
    out.repeated.push_back(std::move(rep));
  }
  return out;
}

OreBound ore_index_bound(const IntPoly& f, const Integer& p) {
  RegularityReport r = is_p_regular(f, p);
  OreBound out;
  out.exact = r.regular;
  for (const auto& rep : r.repeated) out.bound += rep.index;
  return out;
}

unsigned long SplittingType::total_degree() const {
  unsigned long s = 0;
  for (const auto& q : primes) s += q.e * q.f;
  return s;
}

SplittingType splitting_type(const IntPoly& f, const Integer& p) {
  RegularityReport r = is_p_regular(f, p);
  SplittingType st;
  st.p = p;
  st.regular = r.regular;
  if (!r.regular) return st;
  for (const auto& phi : r.simple) {
    PhiSplitting ps{phi, {{1, static_cast<unsigned long>(phi.degree())}}};
    st.breakdown.push_back(ps);
  }
  for (const auto& rep : r.repeated) {
    PhiSplitting ps{rep.phi, {}};
    for (const auto& rd : rep.residuals) {
      for (const auto& [psi, e] : factor_ext(rd.R).factors) {
        ensure(e == 1, "regular residual polynomial has a repeated factor");
        ps.primes.push_back({static_cast<unsigned long>(rd.side.e),
                             static_cast<unsigned long>(rep.phi.degree() * psi.degree())});
      }
    }
    st.breakdown.push_back(std::move(ps));
  }
  for (const auto& ps : st.breakdown) st.primes.insert(st.primes.end(), ps.primes.begin(), ps.primes.end());
  std::sort(st.primes.begin(), st.primes.end());
  ensure(st.total_degree() == static_cast<unsigned long>(f.degree()), "splitting type does not sum to the degree");
  return st;
}

IndexReport index_divisibility(const SplittingType& st, const Integer& p) {
  IndexReport out;
  out.p = p;
  if (!st.regular) return out;
  out.determined = true;
  for (const auto& q : st.primes) ++out.residue_degree_counts[q.f];
  for (const auto& [f, count] : out.residue_degree_counts) {
    const Integer N = count_monic_irreducibles(p, f);
    if (Integer(count) > N) {
      out.divides = true;
      out.witness_degree = f;
      out.witness_bound = N;
      break;
    }
  }
  return out;
}

VpIndexClaim nonmonogeneity_vp_index(const FamilyParams& prm, const Integer& p) {
  VpIndexClaim out;
  const unsigned long k = prm.k(), m = prm.m(), n = prm.n(), km = k * m;
  auto clause = [&out](const std::string& name, bool ok) {
    out.clauses.push_back({name, ok});
    if (!ok && !out.failing_clause) out.failing_clause = name;
    return ok;
  };
  const bool base = clause("p odd prime", p > 2 && is_prime(p)) && clause("m > 1", m > 1) &&
                    clause("n = k + 1", n == k + 1) && clause("mk > k + 1", km > k + 1);
  if (base) {
    const Integer r(km - k - 1);
    const unsigned long vc = vp_unchecked(prm.c(), p);
    const unsigned long vm = vp_unchecked(Integer(m), p);
    clause("(p - 1) | (km - k - 1)", divides(p - 1, r)) && clause("p does not divide km - k - 1", !divides(p, r)) &&
        clause("a = 1 mod p", mod(prm.a(), p) == 1) && clause("p | c", divides(p, prm.c())) &&
        clause("v_p(c) > (k + 1) v_p(m)", vc > (k + 1) * vm) &&
        clause("gcd(v_p(c) - v_p(m), k) = 1", vc >= vm && std::gcd(vc - vm, k) == 1);
  }
  out.hypotheses_met = !out.failing_clause.has_value();
  if (!out.hypotheses_met) return out;

  const IntPoly f = build_poly(prm);
  IrreducibilityResult ir = irreducible_over_Q(f);
  if (ir.verdict == Irreducibility::Reducible)
    throw ReducibleInputError("polynomial is reducible: " + f.to_string(), ir.witness.value_or(IntPoly{}));
  if (ir.verdict == Irreducibility::Unknown) throw UndecidedError("irreducibility undecided within budget");

  out.vp_index = 1;
  out.splitting = splitting_type(f, p);
  out.index = index_divisibility(*out.splitting, p);
  out.consistent = out.index->determined && out.index->divides;
  return out;
}

}  // namespace monogen
