#include <gtest/gtest.h>

#include <random>

#include "monogen/finite_field.hpp"
#include "monogen/int_poly.hpp"
#include "monogen/irreducibility.hpp"
#include "oracles.hpp"

using namespace monogen;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int degree, long bound, bool monic) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Integer> cs;
  for (int i = 0; i <= degree; ++i) cs.push_back(Integer(d(rng)));
  if (monic) cs.back() = 1;
  else if (cs.back() == 0) cs.back() = 1;
  return IntPoly(cs);
}

oracle::SmallPoly to_small(const ModPoly& f) {
  oracle::SmallPoly out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST(IntPoly, Formatting) {
  EXPECT_EQ(IntPoly({1, -2, 2, 0, 1}).to_string(), "x^4 + 2*x^2 - 2*x + 1");
  EXPECT_EQ(IntPoly({-1}).to_string(), "-1");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(IntPoly, RingIdentities) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    IntPoly a = random_poly(rng, i % 6, 9, false), b = random_poly(rng, i % 4, 9, false), c = random_poly(rng, 2, 9, false);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    const Integer x(i - 50);
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
    EXPECT_EQ(a.compose(b).eval(x), a.eval(b.eval(x)));
    EXPECT_EQ(a.shift(Integer(3)).eval(x), a.eval(x + 3));
  }
}

TEST(IntPoly, ResultantMatchesSylvester) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 150; ++i) {
    IntPoly f = random_poly(rng, 1 + i % 7, 20, i % 2 == 0), g = random_poly(rng, 1 + (i / 7) % 5, 20, false);
    EXPECT_EQ(resultant(f, g), oracle::sylvester_resultant(f, g)) << f.to_string() << " , " << g.to_string();
  }
}

TEST(IntPoly, ResultantOfCommonFactorVanishes) {
  const IntPoly h({3, 1});
  EXPECT_EQ(resultant(h * IntPoly({1, 0, 1}), h * IntPoly({-2, 5})), 0);
}

TEST(IntPoly, GcdOverZ) {
  const IntPoly a({1, 1}), b({-2, 0, 1}), c({5, 1, 3});
  EXPECT_EQ(gcd(a * b, a * c), a);
  EXPECT_EQ(gcd(b, c), IntPoly({1}));
}

TEST(FiniteField, FactorizationMatchesTrialDivision) {
  std::mt19937_64 rng(3);
  for (long p : {2, 3, 5, 7}) {
    PrimeField F{Integer(p)};
    for (int i = 0; i < 60; ++i) {
      IntPoly f = random_poly(rng, 1 + i % 8, 30, true);
      if (i % 5 == 0) f = f * f;
      ModPoly fb = reduce(f, F);
      ModFactorization fac = factor_mod_p(fb);
      EXPECT_EQ(fac.product(F), fb);
      std::vector<std::pair<oracle::SmallPoly, unsigned>> got;
      for (const auto& [g, e] : fac.factors) got.push_back({to_small(g), static_cast<unsigned>(e)});
      std::sort(got.begin(), got.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return std::lexicographical_compare(x.first.rbegin(), x.first.rend(), y.first.rbegin(), y.first.rend());
      });
      EXPECT_EQ(got, oracle::factor_by_trial(oracle::reduce(f, p), p)) << f.to_string() << " mod " << p;
    }
  }
}

TEST(FiniteField, FactorizationIsSeedIndependent) {
  PrimeField F{Integer(97)};
  ModPoly f = reduce(IntPoly({-1, 0, 0, 0, 0, 0, 0, 0, 1}), F);  // 8 | 96, so x^8 - 1 splits completely
  auto a = factor_mod_p(f, 1), b = factor_mod_p(f, 987654321);
  EXPECT_EQ(a.factors, b.factors);
  EXPECT_EQ(a.factors.size(), 8u);
}

TEST(FiniteField, LargePrimeSplitsCorrectly) {
  const Integer p("1000000007");
  PrimeField F{p};
  IntPoly f = IntPoly({-3, 1}) * IntPoly({5, 1}) * IntPoly({2, 0, 1});
  ModFactorization fac = factor_mod_p(reduce(f, F));
  EXPECT_EQ(fac.product(F), reduce(f, F));
  for (const auto& [g, e] : fac.factors) EXPECT_TRUE(is_irreducible(g));
}

TEST(FiniteField, ExtensionFieldInverses) {
  PrimeField F{Integer(3)};
  const ModPoly mod = reduce(IntPoly({2, 2, 0, 1}), F);  // x^3 + 2x + 2 is irreducible mod 3
  ASSERT_TRUE(is_irreducible(mod));
  ExtensionField E(mod);
  EXPECT_EQ(E.order(), 27);
  for (long c0 = 0; c0 < 3; ++c0)
    for (long c1 = 0; c1 < 3; ++c1)
      for (long c2 = 0; c2 < 3; ++c2) {
        ModPoly a = reduce(IntPoly({c0, c1, c2}), F);
        if (a.is_zero()) continue;
        EXPECT_EQ(E.mul(a, E.inv(a)), E.one());
        EXPECT_EQ(E.pow(a, Integer(26)), E.one());
      }
}

TEST(FiniteField, ExtensionFactorization) {
  PrimeField F{Integer(2)};
  ExtensionField E(reduce(IntPoly({1, 1, 1}), F));  // F_4
  // y^2 + y + 1 splits over F_4.
  ExtFieldPoly g(E, {E.one(), E.one(), E.one()});
  ExtFactorization fac = factor_ext(g);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.product(E), g);
}

TEST(Irreducibility, KnownCases) {
  EXPECT_EQ(irreducible_over_Q(IntPoly({1, 0, 0, 0, 1})).verdict, Irreducibility::Irreducible);
  auto r = irreducible_over_Q(IntPoly({4, 0, 0, 0, 1}));  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
  ASSERT_EQ(r.verdict, Irreducibility::Reducible);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->degree(), 2);
  EXPECT_EQ(irreducible_over_Q(IntPoly({-2, 0, 0, 1})).verdict, Irreducibility::Irreducible);
  EXPECT_EQ(irreducible_over_Q(IntPoly({-1, 0, 1})).verdict, Irreducibility::Reducible);
  // Swinnerton-Dyer polynomial for sqrt2, sqrt3: reducible mod every prime, irreducible over Q.
  EXPECT_EQ(irreducible_over_Q(IntPoly({1, 0, -10, 0, 1})).verdict, Irreducibility::Irreducible);
}

TEST(Irreducibility, Eisenstein) {
  EXPECT_TRUE(is_eisenstein(IntPoly({6, 3, 0, 1}), Integer(3)));
  EXPECT_FALSE(is_eisenstein(IntPoly({9, 3, 0, 1}), Integer(3)));
  EXPECT_FALSE(is_eisenstein(IntPoly({6, 3, 0, 1}), Integer(2)));
}

TEST(Irreducibility, FactorsMultiplyBack) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    IntPoly a = random_poly(rng, 1 + i % 3, 6, true), b = random_poly(rng, 1 + i % 4, 6, true);
    IntPoly f = a * b;
    if (gcd(f, f.derivative()).degree() > 0) continue;
    auto fac = factor_squarefree_over_Z(f);
    ASSERT_TRUE(fac.has_value());
    IntPoly prod({1});
    for (const auto& g : *fac) {
      prod = prod * g;
      EXPECT_NE(irreducible_over_Q(g).verdict, Irreducibility::Reducible);
    }
    EXPECT_EQ(prod, f);
    EXPECT_GE(fac->size(), 2u);
    EXPECT_EQ(irreducible_over_Q(f).verdict, Irreducibility::Reducible);
  }
}
