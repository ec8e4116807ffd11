#pragma once

#include <vector>

#include "monogen/arith.hpp"
#include "monogen/int_poly.hpp"

// Slow reference implementations that share no code with the library.
namespace oracle {

using monogen::Integer;
using monogen::IntPoly;

// Fraction-free (Bareiss) determinant.
Integer determinant(std::vector<std::vector<Integer>> m);

// Determinant of the Sylvester matrix.
Integer sylvester_resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(d(d-1)/2) Res(f, f') / lead(f).
Integer discriminant(const IntPoly& f);

// Polynomials over Z/p with small p, ascending coefficients in [0, p), trimmed.
using SmallPoly = std::vector<long>;

SmallPoly reduce(const IntPoly& f, long p);
SmallPoly poly_mod(SmallPoly a, const SmallPoly& b, long p);
SmallPoly poly_gcd(SmallPoly a, SmallPoly b, long p);
SmallPoly derivative(const SmallPoly& f, long p);

// Monic irreducible factors with multiplicity by trial division over every
// monic polynomial in increasing degree; sorted by (degree, coefficients).
std::vector<std::pair<SmallPoly, unsigned>> factor_by_trial(SmallPoly f, long p);

// Number of monic irreducible polynomials of degree d over F_p, by enumeration.
unsigned long count_irreducible_by_enumeration(long p, unsigned d);

bool is_prime_by_trial(unsigned long n);
bool squarefree_by_trial(Integer n);
int mobius_by_trial(unsigned long n);

// #{y <= X : y = rho mod gamma^2, gcd(y, alpha0 beta0) = 1, y and alpha beta0 y + beta squarefree}.
unsigned long brute_U(long rho, long gamma, long alpha, long alpha0, long beta, long beta0, long X);

}  // namespace oracle
