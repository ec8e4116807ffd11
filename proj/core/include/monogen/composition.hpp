#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/family.hpp"
#include "monogen/int_poly.hpp"
#include "monogen/irreducibility.hpp"
#include "monogen/monogeneity.hpp"

namespace monogen {

// {p | D_f : p does not divide c a k m} together with
// {p | D_f : m = 1, p | c, p does not divide a (k - n)}.
// nullopt when the discriminant is not fully factored.
std::optional<std::set<Integer>> exceptional_primes(const FamilyParams& params, const FactoredInteger& disc);

struct CompositionCase {
  FamilyParams params;
  IntPoly g;
  IntPoly T;  // f(g(x))
  FactoredInteger disc_f;
  std::set<Integer> exceptional;
};

// Throws UndecidedError when D_f cannot be fully factored within budget.
CompositionCase make_composition_case(const FamilyParams& params, const IntPoly& g, const FactorBudget& budget = {});

struct HypothesisClause {
  std::string name;
  bool holds = false;
  std::optional<Integer> prime;
};

struct HypothesisReport {
  bool holds = true;
  std::vector<HypothesisClause> clauses;
  std::optional<HypothesisClause> first_failure;
};

// rad(k) | c a; for p in E_f: p | g(0), p does not divide d, g' = d x^(d-1) mod p;
// when n = 1, p does not divide D_g for every p | D_f with p | c and p not dividing a.
// Throws ReducibleInputError if T is reducible.
HypothesisReport composition_hypotheses(const CompositionCase& cc, const IrreducibilityBudget& budget = {});

struct CompositionPrime {
  Integer p;
  PrimeVerdict f_verdict;        // classification of p for f
  bool T_divides_index = false;  // Dedekind on T
  bool agrees() const { return f_verdict.passes != T_divides_index; }
};

struct CompositionOptions {
  MonogeneityOptions monogeneity;
  bool report_uncovered = true;
};

struct CompositionResult {
  // Monogenic: no prime dividing D_f divides the index of a root of T.
  MonogeneityStatus status = MonogeneityStatus::Unknown;
  std::optional<Integer> failing_prime;
  std::vector<CompositionPrime> per_prime;
  MonogeneityStatus f_status = MonogeneityStatus::Unknown;
  // Primes of D_T outside D_f; the transfer says nothing about them.
  std::vector<Integer> not_covered;
  bool not_covered_complete = true;
  HypothesisReport hypotheses;
};

// g must be monic. Throws PreconditionError when the hypotheses fail.
CompositionResult composition_monogenic(const CompositionCase& cc, const CompositionOptions& options = {});

struct CompositionDiscriminant {
  Integer value;             // D_{f o g}
  Integer closed_magnitude;  // |a^(m-1) b^(n(mn-m-1)) D_f^m Res(f o g, g')|, or 0 when not integral
  bool magnitude_agrees = false;
};

// f of degree n with leading coefficient a, g of degree m with leading coefficient b.
CompositionDiscriminant discriminant_composition(const IntPoly& f, const IntPoly& g);

}  // namespace monogen
