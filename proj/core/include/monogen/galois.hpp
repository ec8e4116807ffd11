#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/family.hpp"
#include "monogen/irreducibility.hpp"

namespace monogen {

enum class GaloisGroupVerdict { SymmetricGroup, ContainsAlternating, Inconclusive };
std::string to_string(GaloisGroupVerdict v);

struct GaloisClause {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct GaloisVerdict {
  unsigned long degree = 0;
  GaloisGroupVerdict verdict = GaloisGroupVerdict::Inconclusive;
  std::vector<GaloisClause> certificate;

  long q = 0;  // km - n
  bool q_prime = false;
  bool q_in_interval = false;  // d/2 < q < d - 2
  std::optional<Integer> p;    // p | c, p | a, p^2 does not divide a
  bool edge_verified = false;  // polygon at p has the edge (n,1)-(km,0)
  unsigned long parity_value = 0;  // k(m - 1)
  std::optional<Integer> ell;      // v_ell(a) odd, ell does not divide kmc
  unsigned long v_ell_a = 0;
  std::optional<bool> discriminant_square;  // nullopt when undecided
};

// Requires f irreducible; throws ReducibleInputError or UndecidedError otherwise.
GaloisVerdict galois_group_check(const FamilyParams& params, const FactorBudget& budget = {},
                                 const IrreducibilityBudget& irreducibility = {});

// Requires p | c, p | a, p^2 not dividing a, km - n prime. Confirms the ordinary
// coefficient polygon at p has an edge (n,1)-(km,0) whose slope denominator is km - n.
bool newton_edge_check(const FamilyParams& params, const Integer& p);

}  // namespace monogen
