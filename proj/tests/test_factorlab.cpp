#include <gtest/gtest.h>

#include "gonchar/factorlab.hpp"

namespace gonchar {
namespace {

IntPoly lift(const ZpPoly& f) {
  std::vector<mpz_class> c;
  for (auto x : f.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

// roots of f in Z/pZ by exhaustion
int count_roots_mod(const IntPoly& f, std::uint64_t p) {
  const ZpPoly fp = ZpPoly::reduce(f, p);
  int n = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (auto it = fp.coeffs().rbegin(); it != fp.coeffs().rend(); ++it) v = (v * x + *it) % p;
    n += v == 0 ? 1 : 0;
  }
  return n;
}

TEST(Primes, Sieve) {
  auto ps = primes_below(30);
  EXPECT_EQ(ps, (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(primes_below(10000).size(), 1229u);
}

TEST(EllFactor, Examples) {
  EXPECT_EQ(ell_factor(3), IntPoly{1});
  EXPECT_EQ(ell_factor(2), (IntPoly{1, 1}));
  EXPECT_EQ(ell_factor(12), (IntPoly{1, 0, 0, 1}));
  EXPECT_THROW(ell_factor(0), DomainError);
}

TEST(KnownDivisibility, Examples) {
  auto d2 = known_divisibility(2);
  EXPECT_TRUE(d2.divides_z_plus_1);
  EXPECT_FALSE(d2.divides_cyclotomic);
  auto d3 = known_divisibility(3);
  EXPECT_FALSE(d3.divides_z_plus_1);
  EXPECT_FALSE(d3.divides_cyclotomic);
  auto d6 = known_divisibility(6);
  EXPECT_TRUE(d6.divides_z_plus_1);
  EXPECT_TRUE(d6.divides_cyclotomic);
}

TEST(KnownDivisibility, ParityAndSixLaws) {
  for (int d = 1; d <= 300; ++d) {
    auto k = known_divisibility(d);
    ASSERT_EQ(k.divides_z_plus_1, d % 2 == 0) << d;
    ASSERT_EQ(k.divides_cyclotomic, d % 6 == 0) << d;
  }
}

TEST(ReducedPolynomial, Examples) {
  EXPECT_EQ(reduced_polynomial(2), (IntPoly{1, -3, 1}));
  EXPECT_EQ(reduced_polynomial(6), (IntPoly{1, -6, 15, -21, 21, -21, 15, -6, 1}));
  EXPECT_EQ(reduced_polynomial(3), gonchar_poly(3));
}

TEST(FactorDegreesModP, Examples) {
  auto a = factor_degrees_mod_p(IntPoly{1, -3, 1}, 3);
  ASSERT_FALSE(a.skipped());
  EXPECT_EQ(a.pattern.degrees, std::vector<int>{2});
  EXPECT_EQ(count_roots_mod(IntPoly{1, -3, 1}, 3), 0);
  auto b = factor_degrees_mod_p(IntPoly{1, 0, 0, 1}, 2);
  ASSERT_FALSE(b.skipped());
  EXPECT_EQ(b.pattern.degrees, (std::vector<int>{1, 2}));
  auto c = factor_degrees_mod_p(IntPoly{-1, 0, 1}, 3);
  EXPECT_EQ(c.pattern.degrees, (std::vector<int>{1, 1}));
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{1, 2, 1}, 5).status, PatternStatus::NotSquarefree);
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{1, 1, 3}, 3).status, PatternStatus::LeadingCoefficientVanishes);
}

TEST(FactorModP, PatternSoundness) {
  for (int d : {3, 5, 7, 10, 13, 20}) {
    const IntPoly f = reduced_polynomial(d);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 101u, 9973u}) {
      auto pat = factor_degrees_mod_p(f, p);
      if (pat.skipped()) continue;
      auto fs = factor_mod_p(f, p);
      ZpPoly prod(p, {1});
      std::vector<int> degs;
      for (const auto& g : fs) {
        prod = prod * g;
        degs.push_back(g.degree());
        // each factor irreducible: its own pattern is a single degree
        ASSERT_EQ(factor_degrees_mod_p(lift(g), p).pattern.degrees.size(), 1u);
      }
      ASSERT_EQ(prod, ZpPoly::reduce(f, p).monic()) << d << " mod " << p;
      ASSERT_EQ(degs, pat.pattern.degrees);
      // roots mod p are exactly the linear factors
      ASSERT_EQ(count_roots_mod(f, p), std::count(degs.begin(), degs.end(), 1));
    }
  }
}

TEST(AchievableDegrees, SubsetSums) {
  EXPECT_TRUE(achievable_degrees(FactorPattern{3, {2}}).empty());
  EXPECT_EQ(achievable_degrees(FactorPattern{2, {1, 2}}), (std::set<int>{1, 2}));
  EXPECT_EQ(achievable_degrees(FactorPattern{5, {2, 2, 3}}), (std::set<int>{2, 3, 4, 5}));
}

TEST(ExceptionalFactorizations, TableSelfChecks) {
  const auto& t = exceptional_factorizations();
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].d, 4);
  EXPECT_EQ(t[0].factors[1], (IntPoly{-1, 2, -3, 1}));
  EXPECT_EQ(t[1].factors[1], (IntPoly{1, -3, 3, -3, 1}));
  EXPECT_EQ(t[2].factors[2], (IntPoly{1, -4, 5, -3, 5, -4, 1}));
  for (const auto& e : t) {
    IntPoly prod{1};
    for (const auto& f : e.factors) prod = prod * f;
    EXPECT_EQ(prod, gonchar_poly(e.d));
  }
}

TEST(IrreducibilityCertificate, Examples) {
  auto a = irreducibility_certificate(IntPoly{1, -3, 1}, 5);
  EXPECT_EQ(a.status, IrredStatus::Certified);

  auto b = irreducibility_certificate(reduced_polynomial(4));
  ASSERT_EQ(b.status, IrredStatus::Reducible);
  ASSERT_EQ(b.witnesses.size(), 2u);
  EXPECT_EQ(b.witnesses[0], (IntPoly{-1, 2, -3, 1}));
  EXPECT_EQ(b.witnesses[1], (IntPoly{-1, 3, -2, 1}));

  auto c = irreducibility_certificate(reduced_polynomial(8));
  ASSERT_EQ(c.status, IrredStatus::Reducible);
  ASSERT_EQ(c.witnesses.size(), 2u);
  EXPECT_EQ(c.witnesses[0].degree(), 4);
  EXPECT_EQ(c.witnesses[1].degree(), 10);
  EXPECT_THROW(irreducibility_certificate(IntPoly{2, 4}), PreconditionError);
}

TEST(IrreducibilityCertificate, NoFalseReducibleUpToSixty) {
  for (int d = 1; d <= 60; ++d) {
    const IntPoly f = reduced_polynomial(d);
    auto v = irreducibility_certificate(f);
    if (d == 4 || d == 8 || d == 12) {
      ASSERT_EQ(v.status, IrredStatus::Reducible) << d;
      IntPoly prod{1};
      for (const auto& w : v.witnesses) prod = prod * w;
      ASSERT_EQ(prod, f) << d;
    } else {
      ASSERT_NE(v.status, IrredStatus::Reducible) << d;
    }
  }
}

}  // namespace
}  // namespace gonchar
