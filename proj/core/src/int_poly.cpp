#include "monogen/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace monogen {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::lead() const {
  require(!c_.empty(), "leading coefficient of zero polynomial");
  return c_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (lead() < 0) g = -g;
  return divide_exact(g);
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::shift(const Integer& t) const {
  // Taylor shift by repeated synthetic division.
  std::vector<Integer> a = c_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += t * a[j];
  return IntPoly(std::move(a));
}

IntPoly IntPoly::compose(const IntPoly& g) const {
  IntPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= g;
    r += IntPoly::constant(*it);
  }
  return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPoly IntPoly::divide_exact(const Integer& d) const {
  require(d != 0, "division by zero");
  std::vector<Integer> v = c_;
  for (auto& c : v) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw InternalError("coefficient not divisible: " + c.get_str() + " by " + d.get_str());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

Integer IntPoly::max_abs_coeff() const {
  Integer m = 0;
  for (const auto& c : c_)
    if (abs(c) > m) m = abs(c);
  return m;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g) {
  require(!g.is_zero(), "exact_quotient: zero divisor");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<Integer> r = f.coeffs();
  const int dg = g.degree();
  std::vector<Integer> q(f.degree() - dg + 1, Integer(0));
  const Integer& lg = g.lead();
  for (int i = f.degree(); i >= dg; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lg.get_mpz_t());
    q[i - dg] = t;
    for (int j = 0; j <= dg; ++j) mpz_submul(r[i - dg + j].get_mpz_t(), t.get_mpz_t(), g.coeffs()[j].get_mpz_t());
  }
  for (int i = 0; i < dg; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const Integer& lb = b.lead();
  std::vector<Integer> r = a.coeffs();
  int e = a.degree() - db + 1;
  for (int i = a.degree(); i >= db; --i) {
    Integer t = r[i];
    for (auto& c : r) c *= lb;
    if (t != 0)
      for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    r.pop_back();
    --e;
  }
  IntPoly out(std::move(r));
  if (e > 0) out *= pow(lb, static_cast<unsigned long>(e));
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly{1};
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  require(!f.is_zero() && !g.is_zero(), "resultant: zero input");
  if (g.degree() == 0) return pow(g.lead(), f.degree());
  if (f.degree() == 0) return pow(f.lead(), g.degree());

  Integer ca = f.content(), cb = g.content();
  IntPoly A = f.divide_exact(ca), B = g.divide_exact(cb);
  Integer t = pow(ca, g.degree()) * pow(cb, f.degree());
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
  }
  Integer gg = 1, h = 1;
  for (;;) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.divide_exact(gg * pow(h, delta));
    gg = A.lead();
    if (delta >= 1) {
      Integer num = pow(gg, delta), den = pow(h, delta - 1);
      ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()), "subresultant h not exact");
      h = num / den;
    }
    if (B.is_zero()) return 0;
    if (B.degree() == 0) break;
  }
  const int da = A.degree();
  Integer num = pow(B.lead(), da), den = pow(h, da - 1);
  ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()), "subresultant final h not exact");
  return s * t * (num / den);
}

IntPoly compose(const IntPoly& f, const IntPoly& g) { return f.compose(g); }

}  // namespace monogen
