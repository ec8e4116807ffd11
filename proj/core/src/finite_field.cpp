#include "monogen/finite_field.hpp"

namespace monogen {

PrimeField::PrimeField(Integer p) : p_(std::move(p)) {
  require(is_prime(p_), "PrimeField: modulus must be prime");
}

PrimeField::Element PrimeField::inv(const Element& a) const {
  auto r = invmod(a, p_);
  require(r.has_value(), "PrimeField: inverse of zero");
  return *r;
}

PrimeField::Element PrimeField::random(std::mt19937_64& rng) const {
  const std::size_t bits = mpz_sizeinbase(p_.get_mpz_t(), 2) + 64;
  Integer r = 0;
  for (std::size_t got = 0; got < bits; got += 64) {
    r <<= 64;
    r += Integer(static_cast<unsigned long>(rng()));
  }
  return mod(r, p_);
}

ModPoly reduce(const IntPoly& f, const PrimeField& k) {
  std::vector<Integer> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(k.from_integer(c));
  return ModPoly(k, std::move(v));
}

IntPoly lift(const ModPoly& f) { return IntPoly(f.coeffs()); }

ExtensionField::ExtensionField(ModPoly modulus) : base_(modulus.field()), modulus_(std::move(modulus)) {
  require(modulus_.degree() >= 1 && modulus_.lead() == 1, "ExtensionField: modulus must be monic, degree >= 1");
  require(is_irreducible(modulus_), "ExtensionField: modulus must be irreducible");
  order_ = monogen::pow(base_.characteristic(), degree());
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  require(!a.is_zero(), "ExtensionField: inverse of zero");
  auto e = ext_gcd(a, modulus_);
  ensure(e.g.is_one(), "ExtensionField: element not invertible");
  return rem(e.s, modulus_);
}

ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed) { return factor(f, seed); }

ExtFactorization factor_ext(const ExtFieldPoly& f, std::uint64_t seed) { return factor(f, seed); }

}  // namespace monogen
