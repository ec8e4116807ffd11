#pragma once

#include <optional>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/int_poly.hpp"
#include "monogen/monogeneity.hpp"

namespace monogen {

// Parameters of U(X) = #{y <= X : y = rho mod gamma^2, gcd(y, alpha0 beta0) = 1,
// mu(y) != 0, mu(alpha beta0 y + beta) != 0}.
struct CountingConfig {
  Integer rho, gamma, alpha, alpha0, beta, beta0;

  // gcd(alpha0 beta0 rho, gamma) = 1 = gcd(alpha, beta); p | beta implies p^2 | beta;
  // alpha0, beta0 squarefree divisors of alpha, beta; alpha beta0 rho + beta != 0 mod p^2 for p | gamma.
  void validate() const;
};

struct MainTerm {
  long double coefficient = 0;  // value / X at the truncation
  long double value = 0;
  long double lower = 0;  // rigorous bracket for the untruncated product
  long double upper = 0;
  long double bracket_width() const { return upper - lower; }
};

inline constexpr unsigned long kDefaultEulerTruncation = 1000000;

MainTerm main_term(const CountingConfig& cfg, const Integer& X, unsigned long truncation = kDefaultEulerTruncation);

struct CountResult {
  unsigned long count = 0;
  unsigned long unknown = 0;  // squarefreeness undecided within budget
};

CountResult empirical_U(const CountingConfig& cfg, const Integer& X, const FactorBudget& budget = {});

// f = (x^(q^j) + sign)^m - a x^n with q | n, q not dividing m, j = v_q(n), q^j m > n.
class FamilyCountSpec {
 public:
  FamilyCountSpec(Integer q, unsigned long m, unsigned long n, int sign);

  const Integer& q() const { return q_; }
  unsigned long j() const { return j_; }
  unsigned long m() const { return m_; }
  unsigned long n() const { return n_; }
  unsigned long s() const { return s_; }  // n / q^j
  int sign() const { return sign_; }
  unsigned long k() const { return k_; }  // q^j
  // lambda = q mod q^2 and lambda = lambda_p mod p^2 for p | m.
  const Integer& lambda() const { return lambda_; }
  const Integer& gamma() const { return gamma_; }  // q rad(m)
  const Integer& alpha() const { return alpha_; }  // q s^s (m - s)^(m - s)
  const Integer& beta() const { return beta_; }    // m^m

 private:
  Integer q_;
  unsigned long m_, n_, j_ = 0, s_ = 0, k_ = 1;
  int sign_;
  Integer lambda_, gamma_, alpha_, beta_;
};

// Smallest unit u mod p^2 with u^p != u mod p^2.
Integer wieferich_witness(const Integer& p);

enum class CountConvention {
  AValue,  // a <= X
  YValue,  // a = q y with y <= X
};

struct FamilyCount {
  unsigned long candidates = 0;
  unsigned long count = 0;
  std::vector<Integer> monogenic_a;
  unsigned long unknown = 0;
  // Accepted by the binomial check but not by the general classifier.
  std::vector<Integer> certification_failures;
};

// Enumerates a = lambda mod gamma^2 in the range; each hit passes both
// binomial_family_check and is_monogenic.
FamilyCount enumerate_monogenic_family(const FamilyCountSpec& spec, const Integer& X,
                                       CountConvention convention = CountConvention::AValue,
                                       const FactorBudget& budget = {});

// X / (gamma^2 zeta(2)) prod_{p | qm} (1 - p^-2)^-1 prod_{p not dividing qms(m-s)} (1 - 1/(p^2 - 1)).
MainTerm family_main_term(const FamilyCountSpec& spec, const Integer& X,
                          unsigned long truncation = kDefaultEulerTruncation);

struct SquarefreeHit {
  Integer p;
  FactoredInteger value;  // F(p)
  MonogeneityStatus certified = MonogeneityStatus::Unknown;
};

struct SquarefreeSearch {
  IntPoly F;
  std::vector<SquarefreeHit> hits;
  std::vector<Integer> rejected;   // F(p) not squarefree
  std::vector<Integer> undecided;  // factoring budget exhausted
  std::vector<Integer> local_obstructions;  // primes l <= 100 with an obstruction
};

// F(x) = n^n (km-n)^(km-n) x^k - sign^(km-n) (km)^(km), so that F(p) = E - C for
// f = (x^k + sign)^m - p x^n. Requires gcd(km, n) = 1 and rad(k) prime.
SquarefreeSearch squarefree_value_search(unsigned long k, unsigned long m, unsigned long n, int sign,
                                         unsigned long prime_bound, const FactorBudget& budget = {});

inline constexpr unsigned long kMaxObstructionPrime = 1000;

// F(z) = 0 mod l^2 for every unit z mod l^2. Requires l prime, l <= 1000.
bool local_obstruction_check(const IntPoly& F, const Integer& l);

}  // namespace monogen
