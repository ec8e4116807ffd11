#include "monogen/irreducibility.hpp"

#include <algorithm>
#include <numeric>

#include "monogen/finite_field.hpp"

namespace monogen {

std::string to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool is_eisenstein(const IntPoly& f, const Integer& p) {
  if (f.degree() < 1) return false;
  if (mpz_divisible_p(f.lead().get_mpz_t(), p.get_mpz_t())) return false;
  for (int i = 0; i < f.degree(); ++i)
    if (!mpz_divisible_p(f.coeffs()[i].get_mpz_t(), p.get_mpz_t())) return false;
  const Integer& c0 = f.coeffs()[0];
  return !mpz_divisible_p(c0.get_mpz_t(), Integer(p * p).get_mpz_t());
}

namespace {

Integer sym_mod(const Integer& x, const Integer& m) {
  Integer r = mod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

IntPoly reduce_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v;
  for (const auto& c : f.coeffs()) v.push_back(mod(c, m));
  return IntPoly(std::move(v));
}

IntPoly sym_reduce(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v;
  for (const auto& c : f.coeffs()) v.push_back(sym_mod(c, m));
  return IntPoly(std::move(v));
}

std::optional<std::string> eisenstein_shift(const IntPoly& f, int window) {
  for (int step = 0; step <= 2 * window; ++step) {
    // Order 0, 1, -1, 2, -2, ...
    const long t = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    IntPoly g = f.shift(Integer(t));
    Integer content = 0;
    for (int i = 0; i < g.degree(); ++i) content = gcd(content, g.coeffs()[i]);
    if (content == 0 || content == 1) continue;
    FactoredInteger fc = factor_integer(content, FactorBudget{100000, 20000});
    for (const auto& p : fc.primes()) {
      if (is_eisenstein(g, p)) return "eisenstein p=" + p.get_str() + " shift=" + std::to_string(t);
    }
  }
  return std::nullopt;
}

struct SieveOutcome {
  bool proven_irreducible = false;
  std::string method;
  Integer best_prime;
  std::size_t best_count = 0;
};

SieveOutcome degree_sieve(const IntPoly& f, const IrreducibilityBudget& budget) {
  SieveOutcome out;
  const int n = f.degree();
  std::vector<char> common(n + 1, 1);
  unsigned used = 0;
  std::string primes_used;
  for (unsigned long p : primes_up_to(100000)) {
    if (used >= budget.sieve_max_primes) break;
    const Integer P(p);
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
    PrimeField k(P);
    ModPoly fb = reduce(f, k).monic();
    if (gcd(fb, fb.derivative()).degree() != 0) continue;
    auto ddf = distinct_degree_factorization(fb);
    std::size_t count = 0;
    std::vector<char> sums(n + 1, 0);
    sums[0] = 1;
    for (const auto& [block, d] : ddf) {
      const int copies = block.degree() / d;
      count += copies;
      for (int c = 0; c < copies; ++c)
        for (int s = n; s >= d; --s)
          if (sums[s - d]) sums[s] = 1;
    }
    ++used;
    primes_used += (primes_used.empty() ? "" : ",") + std::to_string(p);
    if (out.best_count == 0 || count < out.best_count) {
      out.best_count = count;
      out.best_prime = P;
    }
    if (count == 1) {
      out.proven_irreducible = true;
      out.method = "irreducible mod " + std::to_string(p);
      return out;
    }
    bool empty = true;
    for (int s = 1; s < n; ++s) {
      common[s] = common[s] && sums[s];
      if (common[s]) empty = false;
    }
    if (empty) {
      out.proven_irreducible = true;
      out.method = "degree sieve primes " + primes_used;
      return out;
    }
  }
  return out;
}

// Lifts f = g*h (mod p), g monic, to f = G*H (mod p^k).
std::pair<IntPoly, IntPoly> hensel_two(const IntPoly& f, const ModPoly& g, const ModPoly& h, const Integer& p,
                                       unsigned long k) {
  const PrimeField& field = g.field();
  auto eg = ext_gcd(g, h);
  ensure(eg.g.is_one(), "hensel: factors not coprime");
  IntPoly G = lift(g), H = lift(h);
  Integer pi = p;
  for (unsigned long i = 1; i < k; ++i) {
    IntPoly diff = f - G * H;
    ModPoly e = reduce(diff.divide_exact(pi), field);
    auto [q, r] = divrem(eg.t * e, g);
    ModPoly dh = eg.s * e + q * h;
    G += lift(r) * pi;
    H += lift(dh) * pi;
    pi *= p;
    G = reduce_mod(G, pi);
    H = reduce_mod(H, pi);
  }
  return {G, H};
}

// Monic lifts F_i (mod p^k) with f = lc(f) * prod F_i.
std::vector<IntPoly> hensel_lift(const IntPoly& f, std::vector<ModPoly> gs, const Integer& p, unsigned long k) {
  const PrimeField& field = gs.front().field();
  const Integer M = pow(p, k);
  std::vector<IntPoly> out;
  IntPoly cur = reduce_mod(f, M);
  while (gs.size() > 1) {
    ModPoly g = gs.front();
    gs.erase(gs.begin());
    ModPoly h = ModPoly::constant(field, field.from_integer(cur.lead()));
    for (const auto& x : gs) h *= x;
    auto [G, H] = hensel_two(cur, g, h, p, k);
    out.push_back(G);
    cur = H;
  }
  auto inv = invmod(cur.lead(), M);
  ensure(inv.has_value(), "hensel: leading coefficient not invertible");
  out.push_back(reduce_mod(cur * *inv, M));
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<IntPoly>> factor_squarefree_over_Z(const IntPoly& input, const IrreducibilityBudget& budget) {
  require(input.degree() >= 1, "factor: nonconstant input required");
  IntPoly f = input.primitive_part();
  if (f.degree() == 1) return std::vector<IntPoly>{f};
  require(gcd(f, f.derivative()).degree() == 0, "factor: input must be squarefree");
  if (f.degree() > budget.max_degree) return std::nullopt;

  SieveOutcome sv = degree_sieve(f, budget);
  if (sv.proven_irreducible) return std::vector<IntPoly>{f};
  ensure(sv.best_count > 0, "no prime of good reduction found");
  const Integer p = sv.best_prime;
  PrimeField field(p);
  ModFactorization fb = factor_mod_p(reduce(f, field).monic());
  std::vector<ModPoly> gs;
  for (const auto& [g, e] : fb.factors) gs.push_back(g);

  // Coefficients of a factor of f are bounded by 2^deg * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer root = sqrt(norm2) + 1;
  const Integer bound = 2 * abs(f.lead()) * pow(Integer(2), f.degree()) * root;
  unsigned long k = 1;
  Integer M = p;
  while (M <= bound) {
    M *= p;
    ++k;
  }
  std::vector<IntPoly> lifted = hensel_lift(f, gs, p, k);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  unsigned long trials = 0;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      if (++trials > budget.max_subsets) return std::nullopt;
      const Integer L = rest.lead();
      Integer c0 = L;
      for (std::size_t i : idx) c0 = mod(c0 * lifted[i].coeff(0), M);
      c0 = sym_mod(c0, M);
      if (rest.coeff(0) != 0 &&
          (c0 == 0 || !mpz_divisible_p(Integer(L * rest.coeff(0)).get_mpz_t(), c0.get_mpz_t())))
        continue;
      IntPoly cand = IntPoly::constant(L);
      for (std::size_t i : idx) cand = reduce_mod(cand * lifted[i], M);
      cand = sym_reduce(cand, M).primitive_part();
      auto q = exact_quotient(rest, cand);
      if (!q) continue;
      found.push_back(cand);
      rest = *q;
      for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
      hit = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!hit) ++s;
  }
  found.push_back(rest.primitive_part());
  std::sort(found.begin(), found.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  });
  return found;
}

IrreducibilityResult irreducible_over_Q(const IntPoly& f, const IrreducibilityBudget& budget) {
  require(f.degree() >= 1, "irreducible_over_Q: nonconstant input required");
  require(f.content() == 1, "irreducible_over_Q: input must be primitive");
  IrreducibilityResult out;
  if (f.degree() == 1) {
    out.verdict = Irreducibility::Irreducible;
    out.method = "linear";
    return out;
  }
  if (auto m = eisenstein_shift(f, budget.shift_window)) {
    out.verdict = Irreducibility::Irreducible;
    out.method = *m;
    return out;
  }
  IntPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) {
    out.verdict = Irreducibility::Reducible;
    out.witness = g;
    out.method = "repeated factor";
    return out;
  }
  if (f.degree() > budget.max_degree) {
    out.method = "degree beyond budget";
    return out;
  }
  SieveOutcome sv = degree_sieve(f, budget);
  if (sv.proven_irreducible) {
    out.verdict = Irreducibility::Irreducible;
    out.method = sv.method;
    return out;
  }
  auto factors = factor_squarefree_over_Z(f, budget);
  if (!factors) {
    out.method = "recombination budget exhausted";
    return out;
  }
  if (factors->size() == 1) {
    out.verdict = Irreducibility::Irreducible;
    out.method = "hensel recombination";
    return out;
  }
  out.verdict = Irreducibility::Reducible;
  out.witness = factors->front();
  out.method = "hensel recombination";
  return out;
}

}  // namespace monogen
