#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace cbmw;
using testutil::qv;

namespace {

  // Carry-less product of bit vectors reduced mod an irreducible m of
  // degree k; the reference for F_{2^k} multiplication.
  std::uint64_t gf2_mul(std::uint64_t a, std::uint64_t b, std::uint32_t m, unsigned k) {
    std::uint64_t p = 0;
    for (unsigned i = 0; i < k; ++i) {
      if ((b >> i) & 1) {
        p ^= a << i;
      }
    }
    for (int i = 2 * static_cast<int>(k) - 2; i >= static_cast<int>(k); --i) {
      if ((p >> i) & 1) {
        p ^= static_cast<std::uint64_t>(m) << (i - k);
      }
    }
    return p;
  }

  std::vector<Field> sample_fields() {
    return {Field::rational(), Field::prime(2), Field::prime(13), Field::binary(1),
            Field::binary(2), Field::binary(3), Field::binary(4), Field::binary(8)};
  }

}  // namespace

TEST(Field, RationalArithmeticIsExact) {
  EXPECT_EQ(qv(1, 3) + qv(1, 6), qv(1, 2));
  EXPECT_EQ(qv(2, 3) * qv(9, 4), qv(3, 2));
  EXPECT_EQ((qv(5, 7) / qv(5, 7)), qv(1));
  EXPECT_EQ(qv(-4, 6).to_string(), "-2/3");
  EXPECT_TRUE((qv(1, 3) - qv(2, 6)).is_zero());
}

TEST(Field, PrimeFieldReducesAndInverts) {
  Field const F = Field::prime(13);
  EXPECT_EQ(F.from_int(-1).residue(), 12u);
  EXPECT_EQ((F.from_int(5) * F.from_int(8)).residue(), 1u);
  EXPECT_EQ(F.from_int(5).inverse(), F.from_int(8));
  EXPECT_EQ(F.from_rational(mpq_class(1, 2)), F.from_int(7));
  EXPECT_EQ(F.parse("3/4"), F.from_int(3) / F.from_int(4));
}

TEST(Field, BinaryFieldMatchesCarrylessReference) {
  for (unsigned k = 1; k <= 8; ++k) {
    Field const F = Field::binary(k);
    for (std::uint64_t a = 0; a < F.order(); a += (k > 5 ? 7 : 1)) {
      for (std::uint64_t b = 0; b < F.order(); b += (k > 5 ? 5 : 1)) {
        EXPECT_EQ((F.from_residue(a) * F.from_residue(b)).residue(),
                  gf2_mul(a, b, Field::binary_moduli[k], k))
            << "k=" << k << " a=" << a << " b=" << b;
        EXPECT_EQ((F.from_residue(a) + F.from_residue(b)).residue(), a ^ b);
      }
    }
  }
}

TEST(Field, EveryNonzeroElementIsInvertible) {
  for (auto const& F : {Field::prime(2), Field::prime(5), Field::prime(13),
                        Field::binary(2), Field::binary(3), Field::binary(4),
                        Field::binary(6)}) {
    for (auto const& x : F.elements()) {
      if (x.is_zero()) {
        EXPECT_THROW(x.inverse(), Error);
      } else {
        EXPECT_TRUE((x * x.inverse()).is_one()) << F.name() << " " << x.to_string();
      }
    }
  }
}

TEST(Field, BinaryFieldsHaveCharacteristicTwo) {
  for (unsigned k = 1; k <= 8; ++k) {
    Field const F = Field::binary(k);
    EXPECT_EQ(F.characteristic(), 2u);
    EXPECT_EQ(F.order(), 1u << k);
    for (auto const& x : F.elements()) {
      EXPECT_TRUE((x + x).is_zero());
      EXPECT_EQ(x.pow(static_cast<long long>(F.order())), x);  // Frobenius fixes F
    }
  }
}

TEST(Field, NamesAndConstruction) {
  EXPECT_EQ(Field::rational().name(), "Q");
  EXPECT_EQ(Field::prime(13).name(), "GF(13)");
  EXPECT_EQ(Field::binary(3).name(), "GF(2^3)");
  EXPECT_THROW(Field::prime(15), Error);
  EXPECT_THROW(Field::binary(9), Error);
  EXPECT_THROW(Field::binary(0), Error);
}

TEST(Field, MixingFieldsIsRejected) {
  EXPECT_THROW(qv(1) + Field::prime(5).one(), Error);
  EXPECT_THROW(Field::binary(2).one() * Field::binary(3).one(), Error);
}

TEST(Field, ParseRejectsGarbageAndZeroDenominators) {
  EXPECT_THROW(Field::rational().parse("1.5"), Error);
  EXPECT_THROW(Field::rational().parse(""), Error);
  EXPECT_THROW(Field::rational().parse("1/0"), Error);
  EXPECT_THROW(Field::prime(5).parse("1/5"), Error);
  EXPECT_EQ(Field::rational().parse("-6/4"), qv(-3, 2));
}

TEST(Field, PowersIncludingNegativeExponents) {
  EXPECT_EQ(qv(2).pow(10), qv(1024));
  EXPECT_EQ(qv(2).pow(-3), qv(1, 8));
  EXPECT_TRUE(qv(0).pow(0).is_one());
  EXPECT_THROW(qv(0).pow(-1), Error);
}

TEST(FieldProperty, RingAxiomsOnRandomTriples) {
  Rng rng(42);
  for (auto const& F : sample_fields()) {
    for (int i = 0; i < 200; ++i) {
      auto const a = random_element(F, rng), b = random_element(F, rng),
                 c = random_element(F, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(FieldProperty, OrderingIsTotalAndConsistentWithEquality) {
  Field const F = Field::prime(7);
  auto const  e = F.elements();
  for (auto const& x : e) {
    for (auto const& y : e) {
      EXPECT_EQ(x == y, (x <=> y) == 0);
    }
  }
}
