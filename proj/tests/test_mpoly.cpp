#include <gtest/gtest.h>

#include "oracles/naive_sym.hpp"
#include "test_util.hpp"

using namespace cbmw;
using testutil::qv;

namespace {

  MPoly random_mpoly(std::size_t n, Rng& rng) {
    MPoly p(n);
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, 3), terms(0, 4);
    for (int t = terms(rng); t > 0; --t) {
      MPoly::Exponent e(n);
      for (auto& x : e) {
        x = static_cast<std::uint32_t>(ex(rng));
      }
      p.add_term(e, coef(rng));
    }
    return p;
  }

}  // namespace

TEST(MPoly, EvaluateSumOfVariables) {
  MPoly const p = testutil::u(2, 0) + testutil::u(2, 1);
  auto const  pt = testutil::ints(testutil::Q(), {2, 3});
  EXPECT_EQ(mpoly_eval(p, pt, testutil::Q()), qv(5));
}

TEST(MPoly, EtaZeroOneVariableAtTwo) {
  MPoly const e0 = eta(Sign::plus, 0, Symbolic{1});
  EXPECT_EQ(mpoly_eval(e0, testutil::ints(testutil::Q(), {2}), testutil::Q()), qv(5));
}

TEST(MPoly, SchurQTwoVanishesOverF2) {
  Field const F2 = Field::prime(2);
  MPoly const q2 = schur_q(2, Symbolic{1});
  EXPECT_TRUE(mpoly_eval(q2, testutil::ints(F2, {1}), F2).is_zero());
}

TEST(MPoly, NoStoredZeroCoefficients) {
  MPoly p = testutil::u(2, 0) - testutil::u(2, 0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
  p.add_term({1, 1}, 3);
  p.add_term({1, 1}, -3);
  EXPECT_TRUE(p.is_zero());
}

TEST(MPoly, StructuralEqualityIsPolynomialEquality) {
  MPoly const x = testutil::u(2, 0), y = testutil::u(2, 1);
  EXPECT_EQ((x + y).pow(2), x * x + testutil::k(2, 2) * x * y + y * y);
  EXPECT_FALSE((x + y).pow(2) == x * x + y * y);
}

TEST(MPoly, IntegralityAndDivisibility) {
  MPoly const p = testutil::k(1, 4) * testutil::u(1, 0) + testutil::k(1, 8);
  EXPECT_TRUE(p.is_integral());
  EXPECT_TRUE(p.divisible_by(4));
  EXPECT_FALSE(p.divisible_by(8));
  EXPECT_FALSE((p * mpq_class(1, 3)).is_integral());
}

TEST(MPoly, PermutedSwapsVariables) {
  MPoly const                  p    = testutil::u(3, 0) * testutil::u(3, 0) + testutil::u(3, 2);
  std::vector<std::size_t> const perm = {2, 1, 0};
  EXPECT_EQ(p.permuted(perm), testutil::u(3, 2) * testutil::u(3, 2) + testutil::u(3, 0));
}

TEST(MPoly, EvaluationInPositiveCharacteristic) {
  Field const F = Field::prime(5);
  MPoly const p = testutil::k(2, 7) * testutil::u(2, 0) * testutil::u(2, 1);  // 7 = 2 mod 5
  EXPECT_EQ(mpoly_eval(p, testutil::ints(F, {3, 4}), F), F.from_int(24));
  MPoly const half = testutil::u(1, 0) * mpq_class(1, 2);
  EXPECT_EQ(mpoly_eval(half, testutil::ints(F, {1}), F), F.from_int(3));
  EXPECT_THROW(mpoly_eval(half, testutil::ints(Field::prime(2), {1}), Field::prime(2)),
               Error);
}

TEST(MPoly, VariableCountMismatchThrows) {
  EXPECT_THROW(testutil::u(2, 0) + testutil::u(3, 0), Error);
  EXPECT_THROW(MPoly::variable(2, 2), Error);
  EXPECT_THROW(mpoly_eval(testutil::u(2, 0), testutil::ints(testutil::Q(), {1}),
                          testutil::Q()),
               Error);
}

TEST(MPolyProperty, RingAxiomsMatchNaiveOracle) {
  Rng rng(7);
  for (int i = 0; i < 150; ++i) {
    std::size_t const n = 1 + i % 3;
    MPoly const       a = random_mpoly(n, rng), b = random_mpoly(n, rng),
                c = random_mpoly(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(oracle::from_mpoly(a * b), oracle::from_mpoly(a) * oracle::from_mpoly(b));
    EXPECT_EQ(oracle::from_mpoly(a + b), oracle::from_mpoly(a) + oracle::from_mpoly(b));
  }
}

TEST(MPolyProperty, EvaluationIsARingHomomorphism) {
  Rng rng(8);
  for (auto const& F : {Field::rational(), Field::prime(13), Field::binary(3)}) {
    for (int i = 0; i < 60; ++i) {
      MPoly const a = random_mpoly(2, rng), b = random_mpoly(2, rng);
      auto const  pt = random_roots(F, 2, rng);
      EXPECT_EQ(mpoly_eval(a * b, pt, F), mpoly_eval(a, pt, F) * mpoly_eval(b, pt, F));
      EXPECT_EQ(mpoly_eval(a + b, pt, F), mpoly_eval(a, pt, F) + mpoly_eval(b, pt, F));
    }
  }
}
