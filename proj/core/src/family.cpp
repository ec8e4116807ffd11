#include "monogen/family.hpp"

#include <numeric>
#include <sstream>

namespace monogen {

FamilyParams::FamilyParams(unsigned long k, unsigned long m, unsigned long n, Integer a, Integer c)
    : k_(k), m_(m), n_(n), a_(std::move(a)), c_(std::move(c)) {
  require(k >= 1 && m >= 1 && n >= 1, "FamilyParams: k, m, n must be positive");
  require(k * m > n, "FamilyParams: km > n required");
  require(a_ != 0, "FamilyParams: a must be nonzero");
  require(c_ != 0, "FamilyParams: c must be nonzero");
  t_ = std::gcd(n, k);
}

std::string FamilyParams::describe() const {
  std::ostringstream os;
  os << "(k=" << k_ << ", m=" << m_ << ", n=" << n_ << ", a=" << a_.get_str() << ", c=" << c_.get_str() << ")";
  return os.str();
}

IntPoly build_poly(const FamilyParams& p) {
  IntPoly inner = IntPoly::monomial(1, p.k()) + IntPoly::constant(p.c());
  return inner.pow(p.m()) - IntPoly::monomial(p.a(), p.n());
}

CeePair compute_cee(const FamilyParams& p) {
  const unsigned long km = p.k() * p.m();
  const unsigned long e1 = p.k1() * p.m() - p.n1();
  CeePair r;
  r.C = pow(Integer(km), p.k1() * p.m()) * pow(p.c(), e1);
  r.E = pow(p.a(), p.k1()) * pow(Integer(p.n()), p.n1()) * pow(Integer(km - p.n()), e1);
  return r;
}

namespace {

int closed_sign(const FamilyParams& p) {
  const unsigned long km = p.degree();
  const unsigned long e = km * (km - 1) / 2 + (km + p.n() + p.t()) * (p.m() - 1);
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace

Integer discriminant_closed(const FamilyParams& p) {
  const Integer diff = compute_cee(p).difference();
  return closed_sign(p) * pow(p.a(), p.k() * (p.m() - 1)) * pow(p.c(), p.m() * (p.n() - 1)) * pow(diff, p.t());
}

Integer discriminant_oracle(const IntPoly& f) {
  require(f.degree() >= 1, "discriminant_oracle: nonconstant input required");
  const long n = f.degree();
  Integer res = resultant(f, f.derivative());
  ensure(mpz_divisible_p(res.get_mpz_t(), f.lead().get_mpz_t()), "Res(f, f') not divisible by lc(f)");
  Integer d = res / f.lead();
  return (n * (n - 1) / 2) % 2 == 0 ? d : Integer(-d);
}

FactoredInteger factor_discriminant(const FamilyParams& p, const FactorBudget& budget) {
  const Integer diff = compute_cee(p).difference();
  FactoredInteger out;
  out.sign = 1;
  if (diff == 0) {
    out.sign = 0;
    return out;
  }
  out *= factor_integer(p.a(), budget).power(p.k() * (p.m() - 1));
  out *= factor_integer(p.c(), budget).power(p.m() * (p.n() - 1));
  out *= factor_integer(diff, budget).power(p.t());
  out.sign = sgn(discriminant_closed(p));
  return out;
}

}  // namespace monogen
