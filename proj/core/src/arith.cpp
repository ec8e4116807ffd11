#include "monogen/arith.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace monogen {

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer parse_integer(const std::string& s) {
  Integer r;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || r.set_str(t, 10) != 0) throw PreconditionError("not a decimal integer: " + s);
  return r;
}

Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<Integer> invmod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

Integer powmod(const Integer& base, const Integer& e, const Integer& m) {
  require(m > 0, "powmod: modulus must be positive");
  if (m == 1) return 0;
  Integer b = mod(base, m);
  Integer ee = e;
  if (e < 0) {
    auto inv = invmod(b, m);
    require(inv.has_value(), "powmod: base not invertible for negative exponent");
    b = *inv;
    ee = -e;
  }
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), ee.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Egcd egcd(const Integer& a, const Integer& b) {
  Egcd e;
  mpz_gcdext(e.g.get_mpz_t(), e.u.get_mpz_t(), e.v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return e;
}

unsigned long Valuation::value() const {
  if (!value_) throw PreconditionError("valuation is infinite");
  return *value_;
}

Valuation vp(const Integer& n, const Integer& p) {
  require(p >= 2 && is_prime(p), "vp: p must be prime");
  if (n == 0) return Valuation::infinite();
  return Valuation::finite(vp_unchecked(n, p));
}

unsigned long vp_unchecked(Integer n, const Integer& p) {
  if (n == 0) throw PreconditionError("vp of zero");
  if (p == 2) return mpz_scan1(n.get_mpz_t(), 0);
  return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

// ---------------------------------------------------------------- primes

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

namespace {

constexpr unsigned long kSieveLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = primes_up_to(kSieveLimit);
  return primes;
}

// Products of consecutive small primes that fit in 64 bits, so one bignum
// remainder screens several primes at once.
struct PrimeBlock {
  unsigned long product;
  std::size_t first, last;
};

const std::vector<PrimeBlock>& prime_blocks() {
  static const std::vector<PrimeBlock> blocks = [] {
    std::vector<PrimeBlock> out;
    const auto& ps = small_primes();
    std::size_t i = 0;
    while (i < ps.size()) {
      unsigned __int128 prod = ps[i];
      std::size_t j = i + 1;
      while (j < ps.size() && prod * ps[j] <= ~0UL) prod *= ps[j++];
      out.push_back({static_cast<unsigned long>(prod), i, j});
      i = j;
    }
    return out;
  }();
  return blocks;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, const Integer& base) {
  Integer a = mod(base, n);
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Primality primality(const Integer& n) {
  if (n < 2) return {false, true};
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
    if (n == p) return {true, true};
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, true};
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const bool small = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
  // The first 12 primes are a proven witness set below 3.3e24 > 2^64.
  const std::size_t rounds = small ? 12 : 32;
  const auto& ps = small_primes();
  for (std::size_t i = 0; i < rounds; ++i) {
    if (!miller_rabin_round(n, d, s, Integer(ps[i]))) return {false, true};
  }
  return {true, small};
}

bool is_prime(const Integer& n) { return primality(n).prime; }

// ---------------------------------------------------------------- factoring

Integer FactoredInteger::value() const {
  Integer r = sign;
  r *= cofactor;
  for (const auto& [p, e] : factors) r *= pow(p, e);
  return r;
}

unsigned long FactoredInteger::exponent(const Integer& p) const {
  auto it = factors.find(p);
  return it == factors.end() ? 0 : it->second;
}

std::optional<bool> FactoredInteger::squarefree() const {
  for (const auto& [p, e] : factors)
    if (e >= 2) return false;
  if (cofactor == 1) return true;
  if (mpz_perfect_square_p(cofactor.get_mpz_t())) return false;
  return std::nullopt;
}

std::vector<Integer> FactoredInteger::primes() const {
  std::vector<Integer> out;
  for (const auto& kv : factors) out.push_back(kv.first);
  return out;
}

namespace {

// Restore the invariant: cofactor composite, coprime to every key.
void normalize(FactoredInteger& f) {
  for (auto& [p, e] : f.factors) {
    if (f.cofactor == 1) break;
    e += mpz_remove(f.cofactor.get_mpz_t(), f.cofactor.get_mpz_t(), p.get_mpz_t());
  }
  if (f.cofactor != 1 && is_prime(f.cofactor)) {
    f.probable = f.probable || !primality(f.cofactor).proven;
    f.factors[f.cofactor] += 1;
    f.cofactor = 1;
  }
}

}  // namespace

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& other) {
  sign *= other.sign;
  if (sign == 0) {
    factors.clear();
    cofactor = 1;
    probable = false;
    return *this;
  }
  for (const auto& [p, e] : other.factors) factors[p] += e;
  probable = probable || other.probable;
  cofactor *= other.cofactor;
  normalize(*this);
  return *this;
}

FactoredInteger FactoredInteger::power(unsigned long e) const {
  FactoredInteger r;
  r.sign = (e % 2 == 0 && sign != 0) ? 1 : sign;
  if (e == 0) {
    r.sign = 1;
    return r;
  }
  for (const auto& [p, k] : factors) r.factors[p] = k * e;
  r.cofactor = pow(cofactor, e);
  r.probable = probable;
  return r;
}

std::string to_string(const FactoredInteger& f) {
  if (f.sign == 0) return "0";
  std::ostringstream os;
  if (f.sign < 0) os << "-";
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (f.cofactor != 1) {
    if (!first) os << " * ";
    os << "[" << f.cofactor.get_str() << "]";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor or nullopt
// when the iteration allowance runs out.
std::optional<Integer> rho(const Integer& n, unsigned long& allowance, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  while (allowance > 0) {
    Integer c = Integer(static_cast<unsigned long>(rng() % 1000003 + 1));
    Integer y = Integer(static_cast<unsigned long>(rng() % 1000003 + 2));
    Integer x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    while (g == 1 && allowance > 0) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      allowance = allowance > r ? allowance - r : 0;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          Integer diff = x - y;
          q = q * abs(diff) % n;
        }
        allowance = allowance > steps ? allowance - steps : 0;
        g = gcd(q, n);
        k += steps;
        if (allowance == 0) break;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time from the last checkpoint.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(Integer(x - ys)), n);
      }
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

}  // namespace

FactoredInteger factor_integer(const Integer& n, const FactorBudget& budget) {
  FactoredInteger out;
  out.sign = sgn(n);
  if (n == 0) return out;
  Integer m = abs(n);

  const auto& ps = small_primes();
  const unsigned long bound = std::min(budget.trial_bound, kSieveLimit);
  for (const auto& block : prime_blocks()) {
    if (m == 1) break;
    if (ps[block.first] > bound) break;
    unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), block.product);
    for (std::size_t i = block.first; i < block.last; ++i) {
      unsigned long p = ps[i];
      if (p > bound) break;
      if (r % p != 0) continue;
      unsigned long e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.factors[Integer(p)] = e;
    }
    // Early exit once the remainder has no room for two large factors.
    unsigned long top = std::min(ps[block.last - 1], bound);
    if (m > 1 && Integer(top) * top >= m) {
      out.factors[m] += 1;
      m = 1;
    }
  }
  if (m == 1) return out;

  std::mt19937_64 rng(0x6d6f6e6f67656e31ULL);
  unsigned long allowance = budget.rho_iterations;
  std::vector<std::pair<Integer, unsigned long>> work{{m, 1}};
  while (!work.empty()) {
    auto [x, mult] = work.back();
    work.pop_back();
    if (x == 1) continue;
    Primality pr = primality(x);
    if (pr.prime) {
      out.factors[x] += mult;
      out.probable = out.probable || !pr.proven;
      continue;
    }
    Integer root;
    unsigned long k = 0;
    const bool perfect = mpz_perfect_power_p(x.get_mpz_t());
    for (unsigned long e = mpz_sizeinbase(x.get_mpz_t(), 2); perfect && e >= 2; --e) {
      if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), e)) {
        k = e;
        break;
      }
    }
    if (k >= 2) {
      work.push_back({root, mult * k});
      continue;
    }
    auto d = rho(x, allowance, rng);
    if (!d) {
      out.cofactor *= pow(x, mult);
      continue;
    }
    Integer other = x / *d;
    work.push_back({*d, mult});
    work.push_back({other, mult});
  }
  normalize(out);
  return out;
}

// ---------------------------------------------------------------- misc

int mobius(unsigned long n) {
  if (n == 0) throw PreconditionError("mobius(0)");
  int result = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Integer radical(const Integer& n) {
  FactoredInteger f = factor_integer(n);
  require(f.complete(), "radical: factorization incomplete");
  Integer r = 1;
  for (const auto& kv : f.factors) r *= kv.first;
  return r;
}

Integer count_monic_irreducibles(const Integer& p, unsigned long f) {
  require(f >= 1, "count_monic_irreducibles: degree must be >= 1");
  require(is_prime(p), "count_monic_irreducibles: p must be prime");
  Integer sum = 0;
  for (unsigned long d = 1; d <= f; ++d) {
    if (f % d) continue;
    int mu = mobius(d);
    if (mu != 0) sum += mu * pow(p, f / d);
  }
  ensure(sum % f == 0, "necklace sum not divisible by degree");
  return sum / f;
}

}  // namespace monogen
