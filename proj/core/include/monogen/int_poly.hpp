#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monogen/arith.hpp"

namespace monogen {

// Dense polynomial over Z, coefficients in ascending degree, no stored
// leading zero. The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& lead() const;

  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  Integer eval(const Integer& x) const;
  // f(x + t)
  IntPoly shift(const Integer& t) const;
  IntPoly compose(const IntPoly& g) const;
  IntPoly pow(unsigned long e) const;
  // Coefficients divided exactly by d; throws if some coefficient is not divisible.
  IntPoly divide_exact(const Integer& d) const;
  Integer max_abs_coeff() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& s);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Division by a divisor whose leading coefficient divides every step;
// nullopt when the quotient is not integral or the remainder is nonzero.
std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g);
// lc(B)^(deg A - deg B + 1) * A = Q * B + R
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Primitive gcd over Z with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Res(f, g) = lc(f)^deg g * prod g(roots of f), via the subresultant PRS.
Integer resultant(const IntPoly& f, const IntPoly& g);
IntPoly compose(const IntPoly& f, const IntPoly& g);

}  // namespace monogen
