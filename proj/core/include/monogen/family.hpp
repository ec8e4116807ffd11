#pragma once

#include <string>

#include "monogen/arith.hpp"
#include "monogen/int_poly.hpp"

namespace monogen {

// f(x) = (x^k + c)^m - a x^n with km > n >= 1 and a, c nonzero.
class FamilyParams {
 public:
  FamilyParams(unsigned long k, unsigned long m, unsigned long n, Integer a, Integer c);

  unsigned long k() const { return k_; }
  unsigned long m() const { return m_; }
  unsigned long n() const { return n_; }
  const Integer& a() const { return a_; }
  const Integer& c() const { return c_; }
  unsigned long t() const { return t_; }
  unsigned long n1() const { return n_ / t_; }
  unsigned long k1() const { return k_ / t_; }
  unsigned long degree() const { return k_ * m_; }

  std::string describe() const;
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  unsigned long k_, m_, n_;
  Integer a_, c_;
  unsigned long t_;
};

struct CeePair {
  Integer C, E;
  Integer difference() const { return C - E; }
};

IntPoly build_poly(const FamilyParams& p);
CeePair compute_cee(const FamilyParams& p);
// Closed form, evaluated as written; irreducibility is the caller's concern.
Integer discriminant_closed(const FamilyParams& p);
// (-1)^(N(N-1)/2) Res(f, f') / lc(f); for monic f this is the norm identity.
Integer discriminant_oracle(const IntPoly& f);

// Factorization of the closed-form discriminant assembled from the
// factorizations of a, c and C - E.
FactoredInteger factor_discriminant(const FamilyParams& p, const FactorBudget& budget = {});

}  // namespace monogen
