#include <gtest/gtest.h>

#include <cmath>

#include "monogen/counting.hpp"
#include "monogen/dedekind.hpp"
#include "monogen/family.hpp"
#include "oracles.hpp"

using namespace monogen;

namespace {

CountingConfig tiny() { return CountingConfig{Integer(1), Integer(2), Integer(1), Integer(1), Integer(4), Integer(1)}; }

}  // namespace

TEST(Counting, EmpiricalMatchesBruteForce) {
  for (long X : {0L, 1L, 10L, 50L, 200L, 1000L}) {
    const CountResult r = empirical_U(tiny(), Integer(X));
    EXPECT_EQ(r.unknown, 0u);
    EXPECT_EQ(r.count, oracle::brute_U(1, 2, 1, 1, 4, 1, X)) << X;
  }
  const CountingConfig b{Integer(1), Integer(6), Integer(5), Integer(5), Integer(9), Integer(1)};
  EXPECT_EQ(empirical_U(b, Integer(3000)).count, oracle::brute_U(1, 6, 5, 5, 9, 1, 3000));
}

TEST(Counting, EmpiricalMonotoneAndBounded) {
  const CountingConfig c = tiny();
  unsigned long prev = 0;
  for (long X = 0; X <= 400; X += 7) {
    const unsigned long u = empirical_U(c, Integer(X)).count;
    EXPECT_GE(u, prev);
    EXPECT_LE(u, static_cast<unsigned long>(X / 4 + 1));
    prev = u;
  }
}

TEST(Counting, ConfigValidation) {
  EXPECT_NO_THROW(tiny().validate());
  CountingConfig bad = tiny();
  bad.beta = 2;  // 2 | beta but 4 does not
  EXPECT_THROW(bad.validate(), PreconditionError);
  bad = tiny();
  bad.rho = 2;  // gcd(rho, gamma) = 2
  EXPECT_THROW(bad.validate(), PreconditionError);
}

TEST(Counting, MainTermMatchesDirectProduct) {
  const CountingConfig c = tiny();
  const unsigned long P = 2000;
  const MainTerm t = main_term(c, Integer(1000), P);
  // phi(1)/(1 * 4) / zeta(2) * (1 - 1/4)^-1 * prod_{p odd, p <= P} (1 - 1/(p^2 - 1)).
  long double expect = 1.0L / 4.0L * 6.0L / (M_PIl * M_PIl) / (1.0L - 0.25L);
  for (unsigned long p = 3; p <= P; ++p)
    if (oracle::is_prime_by_trial(p)) expect *= 1.0L - 1.0L / (static_cast<long double>(p) * p - 1.0L);
  EXPECT_NEAR(static_cast<double>(t.value), static_cast<double>(expect * 1000.0L), 1e-9);
  EXPECT_LE(t.lower, t.value);
  EXPECT_EQ(main_term(c, Integer(0)).value, 0.0L);
}

TEST(Counting, FamilySpec) {
  const FamilyCountSpec s(Integer(2), 3, 2, 1);
  EXPECT_EQ(s.k(), 2u);
  EXPECT_EQ(s.j(), 1u);
  EXPECT_EQ(s.s(), 1u);
  EXPECT_EQ(s.gamma(), 6);
  EXPECT_EQ(s.alpha(), 8);
  EXPECT_EQ(s.beta(), 27);
  EXPECT_EQ(mod(s.lambda(), Integer(4)), 2);
  EXPECT_NE(powmod(mod(s.lambda(), Integer(9)), Integer(3), Integer(9)), mod(s.lambda(), Integer(9)));
  EXPECT_THROW(FamilyCountSpec(Integer(3), 3, 3, 1), PreconditionError);  // q | m
  EXPECT_EQ(wieferich_witness(Integer(2)), 3);
  EXPECT_EQ(wieferich_witness(Integer(3)), 2);
}

TEST(Counting, FamilyMainTermRegression) {
  const MainTerm t = family_main_term(FamilyCountSpec(Integer(2), 3, 2, 1), Integer(100000));
  EXPECT_NEAR(static_cast<double>(t.coefficient), 0.0230452943433, 1e-12);
  EXPECT_LT(static_cast<double>(t.bracket_width() / 100000), 1e-6);
}

TEST(Counting, EnumerationIsDoublyCertified) {
  const FamilyCountSpec s(Integer(2), 3, 2, 1);
  const FamilyCount fc = enumerate_monogenic_family(s, Integer(200));
  EXPECT_GT(fc.count, 0u);
  EXPECT_TRUE(fc.certification_failures.empty());
  EXPECT_EQ(fc.count, fc.monogenic_a.size());
  for (const auto& a : fc.monogenic_a) {
    EXPECT_EQ(mod(a - s.lambda(), Integer(36)), 0);
    EXPECT_EQ(binomial_family_check(Integer(2), 1, 3, 2, a, 1).status, MonogeneityStatus::Monogenic);
    EXPECT_EQ(is_monogenic(FamilyParams(2, 3, 2, a, Integer(1))).status, MonogeneityStatus::Monogenic);
  }
}

TEST(Counting, EnumerationMatchesDedekindCount) {
  const FamilyCountSpec s(Integer(2), 3, 2, 1);
  const Integer X(3000);
  unsigned long expect = 0;
  for (Integer a = s.lambda(); a <= X; a += 36) {
    const IntPoly f = build_poly(FamilyParams(2, 3, 2, a, Integer(1)));
    const FactoredInteger d = factor_integer(discriminant_oracle(f));
    ASSERT_TRUE(d.complete());
    const IndexSupport sup = index_prime_support(f, d);
    if (std::none_of(sup.verdicts.begin(), sup.verdicts.end(), [](const auto& kv) { return kv.second; })) ++expect;
  }
  EXPECT_EQ(enumerate_monogenic_family(s, X).count, expect);
}

TEST(Counting, SquarefreeSearch) {
  const SquarefreeSearch s = squarefree_value_search(2, 3, 1, 1, 7);
  EXPECT_EQ(s.F.to_string(), "3125*x^2 - 46656");
  bool seven = false;
  for (const auto& h : s.hits) {
    EXPECT_TRUE(oracle::squarefree_by_trial(h.value.value()));
    EXPECT_EQ(h.certified, MonogeneityStatus::Monogenic);
    if (h.p == 7) {
      seven = true;
      EXPECT_EQ(h.value.value(), 106469);
      EXPECT_EQ(to_string(h.value), "11 * 9679");
    }
  }
  EXPECT_TRUE(seven);
  for (const auto& p : s.rejected) EXPECT_FALSE(oracle::squarefree_by_trial(s.F.eval(p)));
  EXPECT_THROW(squarefree_value_search(2, 3, 2, 1, 7), PreconditionError);
}

TEST(Counting, LocalObstructions) {
  EXPECT_FALSE(local_obstruction_check(IntPoly({-46656, 0, 3125}), Integer(2)));
  EXPECT_TRUE(local_obstruction_check(IntPoly({-1, 0, 1}).pow(2), Integer(2)));
  EXPECT_FALSE(local_obstruction_check(IntPoly({0, 1}), Integer(5)));
  EXPECT_THROW(local_obstruction_check(IntPoly({0, 1}), Integer(1009)), PreconditionError);
  // x^2 - x at z = 3 gives 6, which 4 does not divide.
  EXPECT_FALSE(local_obstruction_check(IntPoly({0, -1, 1}), Integer(2)));
}
