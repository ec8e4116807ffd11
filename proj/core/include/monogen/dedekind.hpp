#pragma once

#include <map>
#include <optional>

#include "monogen/arith.hpp"
#include "monogen/finite_field.hpp"
#include "monogen/int_poly.hpp"

namespace monogen {

struct DedekindReport {
  Integer p;
  ModFactorization factorization;
  ModPoly M;  // (f - prod g_i^e_i) / p reduced mod p
  bool divides_index = false;
  std::optional<ModPoly> offending_factor;
};

// Dedekind's criterion: does p divide [Z_K : Z[theta]] for a root theta of f?
DedekindReport dedekind_divides_index(const IntPoly& f, const Integer& p);

struct IndexSupport {
  std::map<Integer, bool> verdicts;  // prime -> divides the index
  bool complete = true;              // false when primes hide in a cofactor
  Integer cofactor = 1;
};

IndexSupport index_prime_support(const IntPoly& f, const FactoredInteger& disc);

}  // namespace monogen
