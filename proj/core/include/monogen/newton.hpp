#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/family.hpp"
#include "monogen/finite_field.hpp"
#include "monogen/int_poly.hpp"

namespace monogen {

// g = sum a_i(x) phi(x)^i with deg a_i < deg phi.
struct PhiExpansion {
  Integer p;
  IntPoly phi;
  std::vector<IntPoly> coefficients;

  IntPoly reconstruct() const;
};

// phi must be monic and irreducible mod p.
PhiExpansion phi_expansion(const IntPoly& g, const IntPoly& phi, const Integer& p);

// Gauss valuation: minimum p-adic valuation of the coefficients.
Valuation gauss_valuation(const IntPoly& a, const Integer& p);

struct LatticePoint {
  long i = 0;
  long v = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Segment of slope -h/e (h, e coprime) starting at abscissa `start`.
struct Side {
  long h = 0;
  long e = 1;
  long start = 0;
  long start_height = 0;
  long length = 0;
  long degree() const { return length / e; }
  long end() const { return start + length; }
  long end_height() const { return start_height - degree() * h; }
};

struct NewtonPolygonData {
  Integer p;
  IntPoly phi;
  std::vector<LatticePoint> points;  // zero coefficients omitted
  std::vector<LatticePoint> hull;    // lower convex hull vertices, left to right
  std::vector<Side> sides;           // every hull edge
  std::vector<Side> principal;       // edges of negative slope

  long principal_length() const;
};

NewtonPolygonData newton_polygon(const PhiExpansion& expansion);
NewtonPolygonData newton_polygon(const IntPoly& g, const IntPoly& phi, const Integer& p);

struct ResidualData {
  Side side;
  ExtFieldPoly R;
  std::vector<bool> on_side;  // per coefficient c_0..c_d
};

// Residual polynomials over F_phi = F_p[x]/(phi), one per principal side.
std::vector<ResidualData> residual_polynomials(const NewtonPolygonData& npd, const PhiExpansion& expansion);

// deg(phi) times the positive lattice points on or below the principal polygon.
unsigned long phi_index(const NewtonPolygonData& npd);

struct PhiFactorReport {
  IntPoly phi;  // monic lift with coefficients in [0, p)
  unsigned long multiplicity = 0;
  NewtonPolygonData polygon;
  std::vector<ResidualData> residuals;
  std::vector<bool> side_squarefree;
  unsigned long index = 0;
  bool regular() const;
};

struct RegularityReport {
  Integer p;
  bool regular = true;
  std::vector<PhiFactorReport> repeated;  // factors of multiplicity >= 2
  std::vector<IntPoly> simple;            // factors of multiplicity 1
};

// f monic. Runs the polygon and residual pipeline for each repeated factor of f mod p.
RegularityReport is_p_regular(const IntPoly& f, const Integer& p);

struct OreBound {
  unsigned long bound = 0;
  bool exact = false;
};

// v_p(index of Z[theta]) >= bound, with equality when p-regular.
OreBound ore_index_bound(const IntPoly& f, const Integer& p);

struct PrimeIdealType {
  unsigned long e = 1;  // ramification index
  unsigned long f = 1;  // residue degree
  friend auto operator<=>(const PrimeIdealType&, const PrimeIdealType&) = default;
};

struct PhiSplitting {
  IntPoly phi;
  std::vector<PrimeIdealType> primes;
};

// Primes above p in Q[x]/(f). When f is not p-regular the type is left
// undetermined: regular is false and primes is empty.
struct SplittingType {
  Integer p;
  bool regular = false;
  std::vector<PrimeIdealType> primes;  // sorted
  std::vector<PhiSplitting> breakdown;
  unsigned long total_degree() const;
};

SplittingType splitting_type(const IntPoly& f, const Integer& p);

struct IndexReport {
  Integer p;
  bool determined = false;
  bool divides = false;
  std::map<unsigned long, unsigned long> residue_degree_counts;
  std::optional<unsigned long> witness_degree;  // f with count > N_f
  Integer witness_bound;                         // N_f for the witness
  std::optional<unsigned long> vp_index;         // filled only by theorem-backed claims
};

// Does p divide the common index i(K)? Requires a determined splitting type.
IndexReport index_divisibility(const SplittingType& st, const Integer& p);

struct VpIndexClaim {
  bool hypotheses_met = false;
  std::optional<std::string> failing_clause;
  std::vector<std::pair<std::string, bool>> clauses;
  std::optional<unsigned long> vp_index;  // theorem-backed, not computed
  std::optional<SplittingType> splitting;
  std::optional<IndexReport> index;
  bool consistent = false;  // pipeline independently finds p | i(K)
};

// f = (x^k + c)^m - a x^(k+1) at an odd prime p with a = 1 mod p, p | c,
// (p - 1) | (km - k - 1), p not dividing km - k - 1, v_p(c) > (k+1) v_p(m)
// and gcd(v_p(c) - v_p(m), k) = 1 gives v_p(i(K)) = 1.
VpIndexClaim nonmonogeneity_vp_index(const FamilyParams& params, const Integer& p);

}  // namespace monogen
