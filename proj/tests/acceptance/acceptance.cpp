// Runs the nine acceptance criteria; prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monogen/counting.hpp"
#include "monogen/dedekind.hpp"
#include "monogen/family.hpp"
#include "monogen/galois.hpp"
#include "monogen/irreducibility.hpp"
#include "monogen/monogeneity.hpp"
#include "monogen/newton.hpp"
#include "oracles.hpp"

using namespace monogen;

namespace {

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

struct Instance {
  FamilyParams params;
  IntPoly f;
  Irreducibility irreducible;
  Integer closed, oracle;
  FactoredInteger disc;
};

const std::vector<Instance>& grid() {
  static const std::vector<Instance> cache = [] {
    std::vector<Instance> out;
    for (unsigned long k = 1; k <= 4; ++k)
      for (unsigned long m = 1; m <= 4; ++m)
        for (unsigned long n = 1; n <= 4 && n < k * m; ++n)
          for (long a = -10; a <= 10; ++a)
            for (long c = -10; c <= 10; ++c) {
              if (a == 0 || c == 0) continue;
              FamilyParams prm(k, m, n, Integer(a), Integer(c));
              IntPoly f = build_poly(prm);
              Irreducibility irr = irreducible_over_Q(f).verdict;
              Integer closed = discriminant_closed(prm);
              Integer oracle = discriminant_oracle(f);
              FactoredInteger disc;
              if (irr == Irreducibility::Irreducible) disc = factor_discriminant(prm);
              out.push_back({std::move(prm), std::move(f), irr, std::move(closed), std::move(oracle), std::move(disc)});
            }
    return out;
  }();
  return cache;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <class Fn>
void report_mismatch(std::ostringstream& os, unsigned long& bad, Fn describe) {
  if (bad++ < 3) os << " [" << describe() << "]";
}

Outcome criterion1() {
  unsigned long checked = 0, bad = 0;
  std::ostringstream os;
  for (const auto& in : grid()) {
    if (in.irreducible != Irreducibility::Irreducible) continue;
    ++checked;
    if (in.closed != in.oracle) report_mismatch(os, bad, [&] { return in.params.describe(); });
  }
  return {bad == 0 && checked > 1000, std::to_string(checked) + " irreducible instances, " + std::to_string(bad) + " mismatches" + os.str()};
}

Outcome criterion2() {
  unsigned long primes = 0, bad = 0, partial = 0;
  std::ostringstream os;
  for (const auto& in : grid()) {
    if (in.irreducible != Irreducibility::Irreducible) continue;
    if (!in.disc.complete()) ++partial;
    for (const auto& p : in.disc.primes()) {
      ++primes;
      const bool cls = classify_prime(in.params, p).passes;
      const bool ded = dedekind_divides_index(in.f, p).divides_index;
      if (cls == ded) report_mismatch(os, bad, [&] { return in.params.describe() + " p=" + p.get_str(); });
    }
  }
  return {bad == 0, std::to_string(primes) + " primes, " + std::to_string(bad) + " mismatches, " + std::to_string(partial) +
                        " discriminants with an unfactored cofactor" + os.str()};
}

Outcome criterion3() {
  struct Row {
    unsigned long k, m, n;
    long a;
    const char* norm;
  };
  const Row rows[] = {
      {2, 2, 1, 2, "2^2 * 37"},  {2, 3, 1, 2, "2^2 * 8539"}, {2, 5, 1, 2, "2^2 * 7 * 17 * 61 * 71 * 4099"},
      {2, 2, 1, 6, "2^2 * 179"}, {2, 4, 1, 6, "2^2 * 31 * 271 * 383"}, {2, 5, 1, 6, "2^2 * 9049 * 109049"},
      {2, 2, 1, 10, "2^2 * 13 * 47"}, {2, 3, 1, 10, "2^2 * 41 * 1621"}, {2, 4, 1, 10, "2^2 * 3 * 59 * 92623"},
      {2, 2, 1, 14, "2^2 * 1259"}, {2, 3, 1, 14, "2^2 * 141461"}, {2, 4, 1, 14, "2^2 * 3 * 53 * 277 * 821"},
      {2, 5, 1, 14, "2^2 * 11 * 41 * 43 * 397 * 2141"},
      {2, 3, 5, 11, "109 * 3041"}, {3, 3, 2, 14, "23 * 1439 * 261407"}, {2, 3, 5, 23, "19 * 84551"},
      {2, 7, 3, 149, "29 * 691 * 3061 * 4447 * 586237"},
  };
  unsigned long bad = 0;
  std::ostringstream os;
  for (const auto& r : rows) {
    const FamilyParams prm(r.k, r.m, r.n, Integer(r.a), Integer(1));
    const std::string norm = to_string(factor_integer(abs(compute_cee(prm).difference())));
    const MonogeneityStatus st = is_monogenic(prm).status;
    if (norm != r.norm || st != MonogeneityStatus::Monogenic)
      report_mismatch(os, bad, [&] { return prm.describe() + " |N| = " + norm + " " + to_string(st); });
  }
  return {bad == 0, std::to_string(std::size(rows)) + " rows, " + std::to_string(bad) + " mismatches" + os.str()};
}

Outcome criterion4() {
  const GaloisVerdict v = galois_group_check(FamilyParams(5, 6, 11, Integer(21), Integer(3)));
  const bool ok = v.verdict == GaloisGroupVerdict::SymmetricGroup && v.degree == 30 && v.q == 19 && v.q_prime &&
                  v.q_in_interval && v.p == Integer(3) && v.edge_verified && v.parity_value == 25 && v.ell == Integer(7) &&
                  v.discriminant_square == false;
  std::ostringstream os;
  os << to_string(v.verdict) << " S" << v.degree << " q=" << v.q << " p=" << (v.p ? v.p->get_str() : "-")
     << " parity=" << v.parity_value << " ell=" << (v.ell ? v.ell->get_str() : "-");
  return {ok, os.str()};
}

Outcome criterion5() {
  const FamilyParams prm(1, 6, 2, Integer(6), Integer(25));
  const Integer p(5);
  const SplittingType st = splitting_type(build_poly(prm), p);
  bool six = st.primes.size() == 6;
  for (const auto& q : st.primes) six = six && q.e == 1 && q.f == 1;
  const IndexReport idx = index_divisibility(st, p);
  const VpIndexClaim claim = nonmonogeneity_vp_index(prm, p);
  const bool wit = idx.determined && idx.divides && idx.witness_degree == 1u && idx.residue_degree_counts.at(1) == 6 &&
                   idx.witness_bound == 5;
  const bool ok = st.regular && six && st.total_degree() == 6 && wit && claim.vp_index == 1u && claim.consistent;
  std::ostringstream os;
  os << "regular=" << st.regular << " primes=" << st.primes.size() << " sum_ef=" << (st.regular ? st.total_degree() : 0)
     << " witness=" << (wit ? "6 > N_1 = 5" : "missing") << " vp_index=" << (claim.vp_index ? std::to_string(*claim.vp_index) : "-");
  return {ok, os.str()};
}

Outcome criterion6() {
  unsigned long primes = 0, regular = 0, bad = 0;
  std::ostringstream os;
  for (const auto& in : grid()) {
    if (in.irreducible != Irreducibility::Irreducible) continue;
    for (const auto& p : in.disc.primes()) {
      ++primes;
      const RegularityReport rr = is_p_regular(in.f, p);
      unsigned long ind = 0;
      for (const auto& r : rr.repeated) ind += r.index;
      const bool ded = dedekind_divides_index(in.f, p).divides_index;
      bool ok = ind == 0 || ded;
      if (rr.regular) {
        ++regular;
        ok = (ind >= 1) == ded;
      }
      if (!ok) report_mismatch(os, bad, [&] { return in.params.describe() + " p=" + p.get_str(); });
    }
  }
  return {bad == 0, std::to_string(primes) + " primes (" + std::to_string(regular) + " regular), " + std::to_string(bad) +
                        " violations" + os.str()};
}

Outcome criterion7() {
  unsigned long checked = 0, squares = 0, bad = 0;
  std::ostringstream os;
  for (const auto& in : grid()) {
    if (in.irreducible != Irreducibility::Irreducible) continue;
    const FamilyParams& prm = in.params;
    const unsigned long km = prm.k() * prm.m();
    const Integer guard = prm.a() * prm.c() * Integer(km) * Integer(prm.n()) * Integer(km - prm.n());
    const Integer cee = compute_cee(prm).difference();
    std::vector<Integer> ps;
    for (unsigned long p : primes_up_to(40)) ps.push_back(Integer(p));
    for (const auto& p : in.disc.primes())
      if (p > 40 && p.fits_slong_p() && p < 100000) ps.push_back(p);
    for (const auto& p : ps) {
      if (divides(p, guard)) continue;
      ++checked;
      const RepeatedRootWitness w = repeated_root_witness(prm, p);
      const long pl = p.get_si();
      const bool i1 = divides(p, cee);
      const bool ii1 = mod(powmod(w.alpha2, Integer(prm.k1()), p) - powmod(w.alpha1, Integer(prm.n1()), p), p) == 0;
      const auto fp = oracle::reduce(in.f, pl);
      const bool repeated = oracle::poly_gcd(fp, oracle::derivative(fp, pl), pl).size() > 1;
      bool ok = i1 == ii1 && i1 == repeated;
      if (w.beta) ok = ok && mod(in.f.eval(*w.beta), p) == 0 && mod(in.f.derivative().eval(*w.beta), p) == 0;
      if (i1) {
        const Integer p2 = p * p;
        const bool i2 = divides(p2, cee);
        squares += i2;
        const bool ii2 = mod(powmod(w.alpha2, Integer(prm.k1()), p2) - powmod(w.alpha1, Integer(prm.n1()), p2), p2) == 0;
        ok = ok && i2 == ii2 && i2 == alpha_vanishes_mod_p2(prm, w);
      }
      if (!ok) report_mismatch(os, bad, [&] { return prm.describe() + " p=" + p.get_str(); });
    }
  }
  return {bad == 0 && squares > 0, std::to_string(checked) + " (instance, prime) pairs, " + std::to_string(squares) +
                                        " with p^2 | C - E, " + std::to_string(bad) + " violations" + os.str()};
}

Outcome criterion8() {
  const FamilyCountSpec spec(Integer(2), 3, 2, 1);
  const Integer X(100000);
  const MainTerm mt = family_main_term(spec, X);
  const FamilyCount fa = enumerate_monogenic_family(spec, X, CountConvention::AValue);
  const FamilyCount fy = enumerate_monogenic_family(spec, X, CountConvention::YValue);
  const double dev = static_cast<double>((static_cast<long double>(fa.count) - mt.value) / mt.value);
  const double devy = static_cast<double>((static_cast<long double>(fy.count) - mt.value) / mt.value);
  const bool ok = std::abs(dev) <= 0.10 && fa.certification_failures.empty() && fy.certification_failures.empty() &&
                  fa.unknown == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "a <= X: %lu vs main term %.2f (deviation %+.2f%%), y <= X: %lu (%+.1f%%), certification failures %zu",
                fa.count, static_cast<double>(mt.value), 100 * dev, fy.count, 100 * devy,
                fa.certification_failures.size() + fy.certification_failures.size());
  return {ok, buf};
}

Outcome criterion9() {
  bool ok = true, seven = false;
  std::ostringstream os;
  for (int sign : {1, -1}) {
    const SquarefreeSearch s = squarefree_value_search(2, 3, 1, sign, 100);
    unsigned long certified = 0;
    for (const auto& h : s.hits) {
      if (h.certified == MonogeneityStatus::Monogenic) ++certified;
      else ok = false;
      if (sign == 1 && h.p == 7 && h.value.value() == 106469 && to_string(h.value) == "11 * 9679") seven = true;
    }
    if (!s.undecided.empty()) ok = false;
    os << (sign == 1 ? "+: " : ", -: ") << certified << "/" << s.hits.size() << " hits certified";
  }
  os << ", F(7) = 106469 = 11 * 9679 " << (seven ? "found" : "missing");
  return {ok && seven, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 discriminant closed form = resultant oracle", criterion1},
      {"2 prime classifier <=> Dedekind criterion", criterion2},
      {"3 tables reproduced", criterion3},
      {"4 S30 certificate", criterion4},
      {"5 splitting, index and v_p(index) at 5", criterion5},
      {"6 Ore-Dedekind coherence", criterion6},
      {"7 repeated-root equivalences", criterion7},
      {"8 monogenic count vs main term", criterion8},
      {"9 squarefree-value search", criterion9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), s);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
