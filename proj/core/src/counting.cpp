#include "monogen/counting.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "monogen/family.hpp"

namespace monogen {

namespace {

bool divides(const Integer& p, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

std::set<Integer> prime_support(const Integer& n) {
  if (n == 0) return {};
  FactoredInteger f = factor_integer(n);
  ensure(f.complete(), "counting: parameter could not be factored");
  auto ps = f.primes();
  return {ps.begin(), ps.end()};
}

bool squarefree_integer(const Integer& n) {
  if (n == 0) return false;
  FactoredInteger f = factor_integer(n);
  return f.squarefree().value_or(false);
}

// Euler product prod_{p <= P, p not in excluded} (1 - 1/(p^2 - 1)) with the tail bracket.
MainTerm assemble(long double leading, const std::set<Integer>& excluded, const Integer& X, unsigned long truncation) {
  require(X >= 0, "main_term: X must be nonnegative");
  require(truncation >= 2, "main_term: truncation must be at least 2");
  long double prod = 1.0L;
  for (unsigned long p : primes_up_to(truncation)) {
    if (excluded.count(Integer(p))) continue;
    const long double pp = static_cast<long double>(p) * static_cast<long double>(p);
    prod *= 1.0L - 1.0L / (pp - 1.0L);
  }
  MainTerm out;
  out.coefficient = leading * prod;
  const long double x = static_cast<long double>(X.get_d());
  out.value = out.coefficient * x;
  // The tail factor lies in [exp(-sum_{n > P} 2/(n^2 - 1)), 1] and that sum is 1/P + 1/(P+1).
  const long double P = static_cast<long double>(truncation);
  out.upper = out.value;
  out.lower = out.value * std::exp(-(1.0L / P + 1.0L / (P + 1.0L)));
  return out;
}

long double inverse_zeta2() { return 6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>); }

}  // namespace

void CountingConfig::validate() const {
  require(gamma > 0 && alpha > 0 && alpha0 > 0 && beta0 > 0 && rho > 0,
          "CountingConfig: rho, gamma, alpha, alpha0, beta0 must be positive");
  require(gcd(Integer(alpha0 * beta0 * rho), gamma) == 1, "CountingConfig: gcd(alpha0 beta0 rho, gamma) != 1");
  require(gcd(alpha, beta) == 1, "CountingConfig: gcd(alpha, beta) != 1");
  for (const auto& p : prime_support(beta))
    require(divides(p * p, beta), "CountingConfig: some p | beta has p^2 not dividing beta");
  require(divides(alpha0, alpha) && squarefree_integer(alpha0), "CountingConfig: alpha0 must be a squarefree divisor of alpha");
  require(beta != 0 && divides(beta0, beta) && squarefree_integer(beta0),
          "CountingConfig: beta0 must be a squarefree divisor of beta");
  const Integer v = alpha * beta0 * rho + beta;
  for (const auto& p : prime_support(gamma))
    require(!divides(p * p, v), "CountingConfig: alpha beta0 rho + beta = 0 mod p^2 for some p | gamma");
}

MainTerm main_term(const CountingConfig& cfg, const Integer& X, unsigned long truncation) {
  cfg.validate();
  const Integer ab0 = cfg.alpha0 * cfg.beta0;
  std::set<Integer> ps0 = prime_support(ab0 * cfg.gamma);
  Integer phi = ab0;
  for (const auto& p : prime_support(ab0)) phi = phi / p * (p - 1);
  long double leading = static_cast<long double>(phi.get_d()) /
                        (static_cast<long double>(ab0.get_d()) * static_cast<long double>(Integer(cfg.gamma * cfg.gamma).get_d()));
  leading *= inverse_zeta2();
  for (const auto& p : ps0) {
    const long double pp = static_cast<long double>(p.get_d()) * static_cast<long double>(p.get_d());
    leading /= 1.0L - 1.0L / pp;
  }
  std::set<Integer> excluded = prime_support(cfg.alpha * cfg.gamma);
  for (const auto& p : prime_support(cfg.beta)) excluded.insert(p);
  return assemble(leading, excluded, X, truncation);
}

CountResult empirical_U(const CountingConfig& cfg, const Integer& X, const FactorBudget& budget) {
  cfg.validate();
  CountResult out;
  const Integer g2 = cfg.gamma * cfg.gamma;
  const Integer ab0 = cfg.alpha0 * cfg.beta0;
  Integer y = mod(cfg.rho, g2);
  if (y == 0) y = g2;
  for (; y <= X; y += g2) {
    if (gcd(y, ab0) != 1) continue;
    auto s1 = factor_integer(y, budget).squarefree();
    if (s1 == false) continue;
    auto s2 = factor_integer(Integer(cfg.alpha * cfg.beta0 * y + cfg.beta), budget).squarefree();
    if (s2 == false) continue;
    if (!s1 || !s2) {
      ++out.unknown;
      continue;
    }
    ++out.count;
  }
  return out;
}

Integer wieferich_witness(const Integer& p) {
  require(is_prime(p), "wieferich_witness: p must be prime");
  const Integer p2 = p * p;
  for (Integer u = 1; u < p2; ++u) {
    if (divides(p, u)) continue;
    if (powmod(u, p, p2) != u) return u;
  }
  throw InternalError("wieferich_witness: every unit is fixed by u -> u^p");
}

FamilyCountSpec::FamilyCountSpec(Integer q, unsigned long m, unsigned long n, int sign)
    : q_(std::move(q)), m_(m), n_(n), sign_(sign) {
  require(is_prime(q_) && q_.fits_ulong_p(), "FamilyCountSpec: q must be a small prime");
  require(m >= 2 && n >= 2, "FamilyCountSpec: m, n >= 2 required");
  require(sign == 1 || sign == -1, "FamilyCountSpec: sign must be +1 or -1");
  require(divides(q_, Integer(n)), "FamilyCountSpec: q must divide n");
  require(!divides(q_, Integer(m)), "FamilyCountSpec: q must not divide m");
  j_ = vp_unchecked(Integer(n), q_);
  const Integer qj = pow(q_, j_);
  require(qj.fits_ulong_p(), "FamilyCountSpec: q^j too large");
  k_ = qj.get_ui();
  s_ = n / k_;
  require(k_ * m > n, "FamilyCountSpec: q^j m > n required");

  gamma_ = q_ * radical(Integer(m));
  alpha_ = q_ * pow(Integer(s_), s_) * pow(Integer(m - s_), m - s_);
  beta_ = pow(Integer(m), m);
  // CRT: lambda = q mod q^2 and lambda = lambda_p mod p^2.
  Integer modulus = q_ * q_;
  lambda_ = q_;
  for (const auto& p : factor_integer(Integer(m)).primes()) {
    const Integer p2 = p * p;
    const Integer lp = wieferich_witness(p);
    const Integer t = mod((lp - lambda_) * *invmod(modulus, p2), p2);
    lambda_ += modulus * t;
    modulus *= p2;
  }
  lambda_ = mod(lambda_, modulus);
  ensure(modulus == gamma_ * gamma_, "FamilyCountSpec: CRT modulus mismatch");
}

FamilyCount enumerate_monogenic_family(const FamilyCountSpec& spec, const Integer& X, CountConvention convention,
                                       const FactorBudget& budget) {
  FamilyCount out;
  const Integer bound = convention == CountConvention::AValue ? X : Integer(X * spec.q());
  const Integer g2 = spec.gamma() * spec.gamma();
  MonogeneityOptions mo;
  mo.factor = budget;
  for (Integer a = spec.lambda(); a <= bound; a += g2) {
    ++out.candidates;
    MonogeneityResult b = binomial_family_check(spec.q(), spec.j(), spec.m(), spec.n(), a, spec.sign(), budget);
    if (b.status == MonogeneityStatus::Unknown) {
      ++out.unknown;
      continue;
    }
    if (b.status != MonogeneityStatus::Monogenic) continue;
    MonogeneityResult g = is_monogenic(FamilyParams(spec.k(), spec.m(), spec.n(), a, Integer(spec.sign())), mo);
    if (g.status != MonogeneityStatus::Monogenic) {
      out.certification_failures.push_back(a);
      continue;
    }
    ++out.count;
    out.monogenic_a.push_back(a);
  }
  return out;
}

MainTerm family_main_term(const FamilyCountSpec& spec, const Integer& X, unsigned long truncation) {
  const Integer g = spec.gamma();
  long double leading = inverse_zeta2() / static_cast<long double>(Integer(g * g).get_d());
  std::set<Integer> qm = prime_support(spec.q() * Integer(spec.m()));
  for (const auto& p : qm) {
    const long double pp = static_cast<long double>(p.get_d()) * static_cast<long double>(p.get_d());
    leading /= 1.0L - 1.0L / pp;
  }
  std::set<Integer> excluded = prime_support(spec.q() * Integer(spec.m()) * Integer(spec.s()) * Integer(spec.m() - spec.s()));
  return assemble(leading, excluded, X, truncation);
}

SquarefreeSearch squarefree_value_search(unsigned long k, unsigned long m, unsigned long n, int sign,
                                         unsigned long prime_bound, const FactorBudget& budget) {
  require(k >= 1 && m >= 1 && n >= 1 && k * m > n, "squarefree_value_search: km > n >= 1 required");
  require(sign == 1 || sign == -1, "squarefree_value_search: sign must be +1 or -1");
  require(std::gcd(k * m, n) == 1, "squarefree_value_search: gcd(km, n) = 1 required");
  require(k >= 2 && factor_integer(Integer(k)).factors.size() == 1, "squarefree_value_search: rad(k) must be prime");
  const unsigned long km = k * m;
  SquarefreeSearch out;
  const Integer lead = pow(Integer(n), n) * pow(Integer(km - n), km - n);
  Integer constant = pow(Integer(km), km);
  if (sign == -1 && (km - n) % 2 == 1) constant = -constant;
  out.F = IntPoly::monomial(lead, k) - IntPoly::constant(constant);
  for (unsigned long l : primes_up_to(100))
    if (local_obstruction_check(out.F, Integer(l))) out.local_obstructions.push_back(Integer(l));

  MonogeneityOptions mo;
  mo.factor = budget;
  for (unsigned long pu : primes_up_to(prime_bound)) {
    const Integer p(pu);
    const Integer v = out.F.eval(p);
    FactoredInteger fv = factor_integer(v, budget);
    auto sf = fv.squarefree();
    if (!sf) {
      out.undecided.push_back(p);
      continue;
    }
    if (!*sf) {
      out.rejected.push_back(p);
      continue;
    }
    SquarefreeHit hit{p, fv, MonogeneityStatus::Unknown};
    FamilyParams prm(k, m, n, p, Integer(sign));
    ensure(v == -compute_cee(prm).difference(), "squarefree search: F(p) differs from E - C");
    try {
      hit.certified = is_monogenic(prm, mo).status;
    } catch (const ReducibleInputError&) {
      hit.certified = MonogeneityStatus::NotMonogenic;
    } catch (const UndecidedError&) {
      hit.certified = MonogeneityStatus::Unknown;
    }
    out.hits.push_back(std::move(hit));
  }
  return out;
}

bool local_obstruction_check(const IntPoly& F, const Integer& l) {
  require(is_prime(l), "local_obstruction_check: l must be prime");
  require(l <= kMaxObstructionPrime, "local_obstruction_check: l must be at most 1000");
  const unsigned long L = l.get_ui(), L2 = L * L;
  std::vector<unsigned long> cs;
  for (const auto& c : F.coeffs()) cs.push_back(mod(c, Integer(L2)).get_ui());
  for (unsigned long z = 1; z < L2; ++z) {
    if (z % L == 0) continue;
    unsigned long v = 0;
    for (std::size_t i = cs.size(); i-- > 0;) v = (v * z + cs[i]) % L2;
    if (v != 0) return false;
  }
  return true;
}

}  // namespace monogen
