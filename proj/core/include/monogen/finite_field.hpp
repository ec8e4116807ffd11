#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/int_poly.hpp"

namespace monogen {

// Seed for equal-degree splitting; part of every report header.
inline constexpr std::uint64_t kDefaultSplitSeed = 0x5eed2f2d0c0ffee1ULL;

class PrimeField {
 public:
  using Element = Integer;

  explicit PrimeField(Integer p);

  const Integer& characteristic() const { return p_; }
  const Integer& order() const { return p_; }
  unsigned long degree() const { return 1; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const Integer& n) const { return mod(n, p_); }
  bool is_zero(const Element& a) const { return a == 0; }
  Element add(const Element& a, const Element& b) const {
    Element r = a + b;
    if (r >= p_) r -= p_;
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r = a - b;
    if (r < 0) r += p_;
    return r;
  }
  Element neg(const Element& a) const { return a == 0 ? a : Element(p_ - a); }
  Element mul(const Element& a, const Element& b) const {
    Element r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
    return r;
  }
  Element inv(const Element& a) const;
  Element pow(const Element& a, const Integer& e) const { return powmod(a, e, p_); }
  Element pth_root(const Element& a) const { return a; }
  Element random(std::mt19937_64& rng) const;
  int compare(const Element& a, const Element& b) const { return cmp(a, b); }
  std::string format(const Element& a) const { return a.get_str(); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  Integer p_;
};

template <class F>
concept FiniteField = requires(const F& f, const typename F::Element& a, const Integer& e, std::mt19937_64& rng) {
  { f.characteristic() } -> std::convertible_to<Integer>;
  { f.order() } -> std::convertible_to<Integer>;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_integer(e) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.pow(a, e) } -> std::same_as<typename F::Element>;
  { f.pth_root(a) } -> std::same_as<typename F::Element>;
  { f.random(rng) } -> std::same_as<typename F::Element>;
  { f.compare(a, a) } -> std::convertible_to<int>;
  { f.format(a) } -> std::convertible_to<std::string>;
};

// Dense univariate polynomial over a finite field, ascending coefficients,
// no stored leading zero.
template <FiniteField F>
class Poly {
 public:
  using Element = typename F::Element;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& field, Element c) { return Poly(field, std::vector<Element>{std::move(c)}); }
  static Poly monomial(const F& field, Element c, std::size_t degree) {
    std::vector<Element> v(degree + 1, field.zero());
    v[degree] = std::move(c);
    return Poly(field, std::move(v));
  }
  static Poly x(const F& field) { return monomial(field, field.one(), 1); }

  const F& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && field_.compare(c_[0], field_.one()) == 0; }
  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const Element& lead() const {
    require(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(lead()));
  }
  Poly scale(const Element& s) const {
    std::vector<Element> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(field_.mul(c, s));
    return Poly(field_, std::move(v));
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Element> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(field_.mul(c_[i], field_.from_integer(Integer(static_cast<unsigned long>(i)))));
    return Poly(field_, std::move(v));
  }
  Element eval(const Element& x) const {
    Element r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = field_.neg(c);
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const F& k = a.field_;
    std::vector<Element> r(a.c_.size() + b.c_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (k.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a.c_[i], b.c_[j]));
    }
    return Poly(k, std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.field_.compare(a.c_[i], b.c_[i]) != 0) return false;
    return true;
  }

  // Total order: by degree, then coefficients from the constant term up.
  int compare(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      int r = field_.compare(c_[i], o.c_[i]);
      if (r != 0) return r;
    }
    return 0;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (field_.is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      std::string coef = field_.format(c_[i]);
      const bool unit = field_.compare(c_[i], field_.one()) == 0;
      if (i == 0) {
        out += coef;
      } else {
        if (!unit) out += (coef.find(' ') != std::string::npos ? "(" + coef + ")" : coef) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Element> c_;
};

template <FiniteField F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
  require(!b.is_zero(), "polynomial division by zero");
  const F& k = a.field();
  if (a.degree() < b.degree()) return {Poly<F>(k), a};
  std::vector<typename F::Element> r = a.coeffs();
  const int db = b.degree();
  std::vector<typename F::Element> q(a.degree() - db + 1, k.zero());
  const auto inv_lead = k.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    if (k.is_zero(r[i])) continue;
    auto t = k.mul(r[i], inv_lead);
    for (int j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(t, b.coeffs()[j]));
    q[i - db] = std::move(t);
  }
  r.resize(db, k.zero());
  return {Poly<F>(k, std::move(q)), Poly<F>(k, std::move(r))};
}

template <FiniteField F>
Poly<F> rem(const Poly<F>& a, const Poly<F>& b) {
  return divrem(a, b).second;
}

template <FiniteField F>
Poly<F> quo(const Poly<F>& a, const Poly<F>& b) {
  return divrem(a, b).first;
}

// Monic gcd; gcd(0, 0) = 0.
template <FiniteField F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FiniteField F>
struct ExtGcd {
  Poly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <FiniteField F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  const F& k = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(k, k.one()), s1(k);
  Poly<F> t0(k), t1 = Poly<F>::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = k.inv(r0.lead());
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

template <FiniteField F>
Poly<F> mulmod(const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return rem(a * b, m);
}

template <FiniteField F>
Poly<F> powmod(const Poly<F>& base, const Integer& e, const Poly<F>& m) {
  require(e >= 0, "powmod: negative exponent");
  const F& k = base.field();
  Poly<F> result = rem(Poly<F>::constant(k, k.one()), m);
  if (e == 0) return result;
  Poly<F> b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

template <FiniteField F>
Poly<F> pow(const Poly<F>& base, unsigned long e) {
  const F& k = base.field();
  Poly<F> result = Poly<F>::constant(k, k.one());
  Poly<F> b = base;
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

template <FiniteField F>
struct Factorization {
  typename F::Element unit;
  std::vector<std::pair<Poly<F>, unsigned long>> factors;

  Poly<F> product(const F& field) const {
    Poly<F> r = Poly<F>::constant(field, unit);
    for (const auto& [g, e] : factors) r *= pow(g, e);
    return r;
  }
  bool squarefree() const {
    return std::all_of(factors.begin(), factors.end(), [](const auto& fe) { return fe.second == 1; });
  }
};

namespace detail {

// Input f with f' = 0: f = g(x^p), so f = (sum root(g_i) x^i)^p.
template <FiniteField F>
Poly<F> pth_root_poly(const Poly<F>& f, unsigned long p) {
  const F& k = f.field();
  std::vector<typename F::Element> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(k.pth_root(f.coeffs()[i]));
  return Poly<F>(k, std::move(v));
}

template <FiniteField F>
void squarefree_rec(const Poly<F>& f, unsigned long scale, std::vector<std::pair<Poly<F>, unsigned long>>& out) {
  if (f.degree() <= 0) return;
  const Integer& ch = f.field().characteristic();
  Poly<F> d = f.derivative();
  if (d.is_zero()) {
    ensure(ch.fits_ulong_p(), "zero derivative with huge characteristic");
    const unsigned long p = ch.get_ui();
    squarefree_rec(pth_root_poly(f, p), scale * p, out);
    return;
  }
  Poly<F> c = gcd(f, d);
  Poly<F> w = quo(f, c);
  unsigned long i = 1;
  while (w.degree() > 0) {
    Poly<F> y = gcd(w, c);
    Poly<F> fac = quo(w, y);
    if (fac.degree() > 0) out.push_back({fac, i * scale});
    ++i;
    w = std::move(y);
    c = quo(c, w);
  }
  if (c.degree() > 0) {
    ensure(ch.fits_ulong_p(), "p-th power part with huge characteristic");
    const unsigned long p = ch.get_ui();
    squarefree_rec(pth_root_poly(c, p), scale * p, out);
  }
}

template <FiniteField F>
Poly<F> random_poly(const F& k, int degree_below, std::mt19937_64& rng) {
  std::vector<typename F::Element> v;
  for (int i = 0; i < degree_below; ++i) v.push_back(k.random(rng));
  return Poly<F>(k, std::move(v));
}

template <FiniteField F>
void equal_degree_split(const Poly<F>& f, int d, std::mt19937_64& rng, std::vector<Poly<F>>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const F& k = f.field();
  const Integer& q = k.order();
  const bool even = k.characteristic() == 2;
  Integer exponent = (pow(q, static_cast<unsigned long>(d)) - 1) / 2;
  const unsigned long trace_len = even ? (mpz_sizeinbase(q.get_mpz_t(), 2) - 1) * static_cast<unsigned long>(d) : 0;
  for (;;) {
    Poly<F> a = random_poly(k, f.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly<F> b(k);
    if (even) {
      Poly<F> s = a;
      b = a;
      for (unsigned long i = 1; i < trace_len; ++i) {
        s = mulmod(s, s, f);
        b += s;
      }
    } else {
      b = powmod(a, exponent, f) - Poly<F>::constant(k, k.one());
    }
    Poly<F> g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(quo(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Squarefree decomposition of a monic polynomial: pairwise coprime
// squarefree parts with multiplicities.
template <FiniteField F>
std::vector<std::pair<Poly<F>, unsigned long>> squarefree_decomposition(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, unsigned long>> out;
  detail::squarefree_rec(f.monic(), 1, out);
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial: pairs
// (product of all irreducible factors of degree d, d).
template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> distinct_degree_factorization(const Poly<F>& f) {
  const F& k = f.field();
  std::vector<std::pair<Poly<F>, int>> out;
  Poly<F> rest = f;
  const Poly<F> x = Poly<F>::x(k);
  Poly<F> h = rem(x, rest);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, k.order(), rest);
    Poly<F> g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.push_back({g, d});
      rest = quo(rest, g);
      h = rem(h, rest);
    }
  }
  if (rest.degree() > 0) out.push_back({rest, rest.degree()});
  return out;
}

template <FiniteField F>
Factorization<F> factor(const Poly<F>& f, std::uint64_t seed = kDefaultSplitSeed) {
  require(!f.is_zero(), "factor: zero polynomial");
  const F& k = f.field();
  Factorization<F> out{f.lead(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [part, e] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(part)) {
      std::vector<Poly<F>> pieces;
      detail::equal_degree_split(block, d, rng, pieces);
      for (auto& g : pieces) out.factors.push_back({g.monic(), e});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first.compare(b.first) < 0; });
  (void)k;
  return out;
}

template <FiniteField F>
bool is_irreducible(const Poly<F>& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  Poly<F> m = f.monic();
  if (gcd(m, m.derivative()).degree() != 0) return false;
  auto ddf = distinct_degree_factorization(m);
  return ddf.size() == 1 && ddf[0].second == f.degree();
}

using ModPoly = Poly<PrimeField>;
using ModFactorization = Factorization<PrimeField>;

ModPoly reduce(const IntPoly& f, const PrimeField& k);
// Representatives in [0, p).
IntPoly lift(const ModPoly& f);

// The residue field F_p[x]/(phi) for a monic irreducible phi over F_p.
class ExtensionField {
 public:
  using Element = ModPoly;

  explicit ExtensionField(ModPoly modulus);

  const PrimeField& base() const { return base_; }
  const ModPoly& modulus() const { return modulus_; }
  const Integer& characteristic() const { return base_.characteristic(); }
  const Integer& order() const { return order_; }
  unsigned long degree() const { return static_cast<unsigned long>(modulus_.degree()); }

  Element zero() const { return ModPoly(base_); }
  Element one() const { return ModPoly::constant(base_, 1); }
  Element from_integer(const Integer& n) const { return ModPoly::constant(base_, base_.from_integer(n)); }
  Element from_base(const ModPoly& a) const { return rem(a, modulus_); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return mulmod(a, b, modulus_); }
  Element inv(const Element& a) const;
  Element pow(const Element& a, const Integer& e) const { return powmod(a, e, modulus_); }
  Element pth_root(const Element& a) const { return pow(a, order_ / characteristic()); }
  Element random(std::mt19937_64& rng) const { return detail::random_poly(base_, modulus_.degree(), rng); }
  int compare(const Element& a, const Element& b) const { return a.compare(b); }
  std::string format(const Element& a) const { return a.to_string("t"); }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) { return a.modulus_ == b.modulus_; }

 private:
  PrimeField base_;
  ModPoly modulus_;
  Integer order_;
};

using ExtFieldPoly = Poly<ExtensionField>;
using ExtFactorization = Factorization<ExtensionField>;

ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed = kDefaultSplitSeed);
ExtFactorization factor_ext(const ExtFieldPoly& f, std::uint64_t seed = kDefaultSplitSeed);

}  // namespace monogen
