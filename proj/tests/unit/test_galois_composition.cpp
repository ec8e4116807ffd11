#include <gtest/gtest.h>

#include "monogen/composition.hpp"
#include "monogen/dedekind.hpp"
#include "monogen/family.hpp"
#include "monogen/galois.hpp"
#include "monogen/irreducibility.hpp"
#include "oracles.hpp"

using namespace monogen;

TEST(Galois, SymmetricExample) {
  const GaloisVerdict v = galois_group_check(FamilyParams(5, 6, 11, Integer(21), Integer(3)));
  EXPECT_EQ(v.verdict, GaloisGroupVerdict::SymmetricGroup);
  EXPECT_EQ(v.degree, 30u);
  EXPECT_EQ(v.q, 19);
  EXPECT_TRUE(v.q_prime && v.q_in_interval && v.edge_verified);
  EXPECT_EQ(v.p, Integer(3));
  EXPECT_EQ(v.parity_value, 25u);
  EXPECT_EQ(v.ell, Integer(7));
  EXPECT_EQ(v.discriminant_square, false);
  for (const auto& c : v.certificate) EXPECT_TRUE(c.holds) << c.name;
  EXPECT_TRUE(newton_edge_check(FamilyParams(5, 6, 11, Integer(21), Integer(3)), Integer(3)));
}

TEST(Galois, IntervalFailureIsInconclusive) {
  // q = 3 is not strictly between d/2 = 2 and d - 2 = 2.
  const GaloisVerdict v = galois_group_check(FamilyParams(2, 2, 1, Integer(2), Integer(1)));
  EXPECT_EQ(v.verdict, GaloisGroupVerdict::Inconclusive);
  EXPECT_FALSE(v.q_in_interval);
}

TEST(Galois, VerdictsImplyDiscriminantFacts) {
  unsigned symmetric = 0;
  for (long a3 : {1, 2, 5, 7, 10, 11, 13, -1, -7, -13})
    for (long c : {3, 6, -3, 15}) {
      const FamilyParams prm(5, 6, 11, Integer(3 * a3), Integer(c));
      if (irreducible_over_Q(build_poly(prm)).verdict != Irreducibility::Irreducible) continue;
      const GaloisVerdict v = galois_group_check(prm);
      const Integer d = discriminant_closed(prm);
      const bool square = d > 0 && mpz_perfect_square_p(d.get_mpz_t());
      if (v.verdict == GaloisGroupVerdict::SymmetricGroup) {
        ++symmetric;
        ASSERT_TRUE(v.ell.has_value());
        EXPECT_EQ(vp(d, *v.ell).value() % 2, 1u) << prm.describe();
        EXPECT_FALSE(square);
      }
      if (v.verdict == GaloisGroupVerdict::ContainsAlternating) { EXPECT_TRUE(square); }
      if (v.discriminant_square) { EXPECT_EQ(*v.discriminant_square, square); }
    }
  EXPECT_GT(symmetric, 5u);
}

TEST(Composition, ExampleTransfer) {
  const FamilyParams prm(2, 2, 1, Integer(2), Integer(1));
  const IntPoly g({37, 37, 0, 1});
  const CompositionCase cc = make_composition_case(prm, g);
  EXPECT_EQ(cc.exceptional, (std::set<Integer>{Integer(37)}));
  EXPECT_EQ(cc.T, compose(build_poly(prm), g));
  const HypothesisReport h = composition_hypotheses(cc);
  EXPECT_TRUE(h.holds);
  const CompositionResult r = composition_monogenic(cc);
  EXPECT_EQ(r.status, MonogeneityStatus::Monogenic);
  EXPECT_EQ(r.f_status, MonogeneityStatus::Monogenic);
  for (const auto& cp : r.per_prime) EXPECT_TRUE(cp.agrees());
  for (const auto& p : r.not_covered) EXPECT_FALSE(mpz_divisible_p(Integer(296).get_mpz_t(), p.get_mpz_t()));
}

TEST(Composition, HypothesisFailure) {
  const CompositionCase cc = make_composition_case(FamilyParams(2, 2, 1, Integer(2), Integer(1)), IntPoly({1, 0, 0, 1}));
  const HypothesisReport h = composition_hypotheses(cc);
  EXPECT_FALSE(h.holds);
  ASSERT_TRUE(h.first_failure.has_value());
  EXPECT_EQ(h.first_failure->name, "p | g(0)");
  EXPECT_THROW(composition_monogenic(cc), PreconditionError);
}

TEST(Composition, DiscriminantMatchesOracle) {
  const std::vector<IntPoly> gs = {IntPoly({0, 0, 1}), IntPoly({1, 0, 1}), IntPoly({2, 1, 1}), IntPoly({0, 3, 0, 1}),
                                   IntPoly({1, 2}), IntPoly({-1, 0, 3})};
  const std::vector<IntPoly> fs = {IntPoly({1, 0, 1}), IntPoly({-2, 0, 0, 1}), IntPoly({1, -1, 1}), IntPoly({3, 1, 0, 2})};
  for (const auto& f : fs)
    for (const auto& g : gs) {
      const CompositionDiscriminant d = discriminant_composition(f, g);
      const IntPoly T = compose(f, g);
      EXPECT_EQ(d.value, oracle::discriminant(T)) << f.to_string() << " o " << g.to_string();
      if (d.value != 0) { EXPECT_TRUE(d.magnitude_agrees) << f.to_string() << " o " << g.to_string(); }
    }
}

// Under the hypotheses each prime of D_f divides the index of T exactly when it
// fails for f (local reading); globally T monogenic forces f monogenic.
TEST(Composition, GridEquivalence) {
  unsigned held = 0;
  const std::vector<IntPoly> gs = {IntPoly({0, 1, 1}), IntPoly({0, 0, 1}), IntPoly({0, 0, 0, 1}), IntPoly({0, 1, 0, 1})};
  for (unsigned long k = 1; k <= 2; ++k)
    for (unsigned long m = 1; m <= 3; ++m)
      for (unsigned long n = 1; n < k * m; ++n)
        for (long a = -6; a <= 6; ++a)
          for (long c = -6; c <= 6; ++c) {
            if (a == 0 || c == 0) continue;
            const FamilyParams prm(k, m, n, Integer(a), Integer(c));
            if (irreducible_over_Q(build_poly(prm)).verdict != Irreducibility::Irreducible) continue;
            for (const auto& g : gs) {
              const CompositionCase cc = make_composition_case(prm, g);
              if (irreducible_over_Q(cc.T).verdict != Irreducibility::Irreducible) continue;
              if (!composition_hypotheses(cc).holds) continue;
              ++held;
              const CompositionResult r = composition_monogenic(cc);
              for (const auto& cp : r.per_prime) {
                EXPECT_TRUE(cp.agrees()) << prm.describe() << " g=" << g.to_string() << " p=" << cp.p;
                EXPECT_EQ(cp.T_divides_index, dedekind_divides_index(cc.T, cp.p).divides_index);
              }
              EXPECT_EQ(r.status, r.f_status) << prm.describe() << " g=" << g.to_string();
              const FactoredInteger dT = factor_integer(discriminant_oracle(cc.T));
              if (!dT.complete()) continue;
              const IndexSupport s = index_prime_support(cc.T, dT);
              const bool t_mono = std::none_of(s.verdicts.begin(), s.verdicts.end(), [](const auto& kv) { return kv.second; });
              if (t_mono) { EXPECT_EQ(r.f_status, MonogeneityStatus::Monogenic) << prm.describe() << " g=" << g.to_string(); }
            }
          }
  EXPECT_GT(held, 20u);
}
