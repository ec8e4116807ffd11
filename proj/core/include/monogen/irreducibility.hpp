#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/int_poly.hpp"

namespace monogen {

struct IrreducibilityBudget {
  int shift_window = 4;  // Eisenstein shifts t in [-w, w]
  unsigned sieve_min_primes = 5;
  unsigned sieve_max_primes = 40;
  unsigned long max_subsets = 200000;  // recombination trials
  int max_degree = 128;
};

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::Unknown;
  std::optional<IntPoly> witness;  // a proper factor when Reducible
  std::string method;
};

std::string to_string(Irreducibility v);

bool is_eisenstein(const IntPoly& f, const Integer& p);

// Tier order: Eisenstein shifts, degree-set sieve, Hensel lift and recombine.
IrreducibilityResult irreducible_over_Q(const IntPoly& f, const IrreducibilityBudget& budget = {});

// Complete factorization of a primitive squarefree polynomial into
// irreducible primitive factors (positive leading coefficients), sorted by
// degree then coefficients. nullopt when the budget runs out.
std::optional<std::vector<IntPoly>> factor_squarefree_over_Z(const IntPoly& f,
                                                             const IrreducibilityBudget& budget = {});

}  // namespace monogen
