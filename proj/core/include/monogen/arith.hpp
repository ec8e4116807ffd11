#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monogen {

using Integer = mpz_class;

// Raised when a caller violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a derived fact that must hold by construction fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw PreconditionError(what);
}
inline void ensure(bool cond, const char* what) {
  if (!cond) throw InternalError(what);
}

std::string to_string(const Integer& n);
Integer parse_integer(const std::string& s);

Integer pow(const Integer& base, unsigned long e);
// Nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);
std::optional<Integer> invmod(const Integer& a, const Integer& m);
// base^e mod m; negative e uses the modular inverse.
Integer powmod(const Integer& base, const Integer& e, const Integer& m);
Integer binomial(unsigned long n, unsigned long k);

struct Egcd {
  Integer g, u, v;  // u*a + v*b = g >= 0
};
Egcd egcd(const Integer& a, const Integer& b);

class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  static Valuation finite(unsigned long v) { return Valuation(v); }

  bool is_infinite() const { return !value_; }
  unsigned long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  explicit Valuation(unsigned long v) : value_(v) {}
  std::optional<unsigned long> value_;
};

Valuation vp(const Integer& n, const Integer& p);
// v_p(n) for n != 0; no primality check on p, for internal hot paths.
unsigned long vp_unchecked(Integer n, const Integer& p);

struct FactorBudget {
  unsigned long trial_bound = 1000000;
  unsigned long rho_iterations = 1000000;
};

struct FactoredInteger {
  int sign = 0;
  std::map<Integer, unsigned long> factors;
  Integer cofactor = 1;
  bool probable = false;  // some key is only a strong probable prime

  bool complete() const { return cofactor == 1; }
  Integer value() const;
  unsigned long exponent(const Integer& p) const;
  // nullopt when the cofactor leaves the answer open.
  std::optional<bool> squarefree() const;
  std::vector<Integer> primes() const;

  FactoredInteger& operator*=(const FactoredInteger& other);
  FactoredInteger power(unsigned long e) const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

std::string to_string(const FactoredInteger& f);

FactoredInteger factor_integer(const Integer& n, const FactorBudget& budget = {});

struct Primality {
  bool prime = false;
  bool proven = false;  // false: strong probable prime above 2^64
};

// Deterministic Miller-Rabin below 2^64. Above, 32 fixed Miller-Rabin bases;
// for a random composite the chance of passing is below 4^-32.
Primality primality(const Integer& n);
bool is_prime(const Integer& n);

int mobius(unsigned long n);
std::vector<unsigned long> primes_up_to(unsigned long bound);
Integer radical(const Integer& n);
Integer count_monic_irreducibles(const Integer& p, unsigned long f);

}  // namespace monogen
