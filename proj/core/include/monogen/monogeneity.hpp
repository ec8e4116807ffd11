#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/family.hpp"
#include "monogen/int_poly.hpp"
#include "monogen/irreducibility.hpp"

namespace monogen {

class ReducibleInputError : public PreconditionError {
 public:
  ReducibleInputError(const std::string& what, IntPoly witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  const IntPoly& witness() const { return witness_; }

 private:
  IntPoly witness_;
};

// Irreducibility could not be settled within budget.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PrimeCase { I, II, III, IVa, IVb, V, VI, VII };
std::string to_string(PrimeCase c);

struct PrimeVerdict {
  Integer p;
  PrimeCase case_label = PrimeCase::VII;
  bool passes = false;
  std::map<std::string, Integer> witnesses;
  std::optional<IntPoly> t_poly;  // condition (v) only
};

enum class MonogeneityStatus { Monogenic, NotMonogenic, Unknown };
std::string to_string(MonogeneityStatus s);

struct MonogeneityResult {
  MonogeneityStatus status = MonogeneityStatus::Unknown;
  std::optional<Integer> failing_prime;
  std::vector<PrimeVerdict> per_prime;  // ascending primes
  FactoredInteger discriminant;
  std::string irreducibility_method;
};

struct MonogeneityOptions {
  FactorBudget factor;
  IrreducibilityBudget irreducibility;
  bool short_circuit = true;
};

// p must divide the discriminant of f.
PrimeVerdict classify_prime(const FamilyParams& params, const Integer& p);
bool divides_discriminant(const FamilyParams& params, const Integer& p);

// Throws ReducibleInputError or UndecidedError when f is not known irreducible.
MonogeneityResult is_monogenic(const FamilyParams& params, const MonogeneityOptions& options = {});

// f = (x^(q^j) + sign)^m - a x^n with q || a, m >= 2, q^j m > n.
MonogeneityResult binomial_family_check(const Integer& q, unsigned long j, unsigned long m, unsigned long n,
                                        const Integer& a, int sign, const FactorBudget& budget = {});

struct RepeatedRootWitness {
  Integer p;
  Integer alpha1, alpha2, alpha;  // residues mod p^2
  Integer u1, u2;                 // k u1 + n u2 = t
  bool p_divides_cee = false;
  std::optional<Integer> beta;  // beta^t = alpha mod p, smallest such residue
};

// Requires p not dividing a c k m n (km - n).
RepeatedRootWitness repeated_root_witness(const FamilyParams& params, const Integer& p);
// (alpha^k1 + c)^m - a alpha^n1 mod p^2 vanishes.
bool alpha_vanishes_mod_p2(const FamilyParams& params, const RepeatedRootWitness& w);

}  // namespace monogen
