#include <gtest/gtest.h>

#include <random>

#include "hopfcleft/scalar.hpp"

using namespace hopfcleft;

TEST(Scalar, RationalArithmetic) {
  Field q = Field::rationals();
  Scalar a(q, mpq_class(1, 2)), b(q, mpq_class(1, 3));
  EXPECT_EQ((a + b).to_string(), "5/6");
  EXPECT_EQ((a / b).to_string(), "3/2");
  EXPECT_EQ((a - b).to_string(), "1/6");
}

TEST(Scalar, PrimeFieldArithmetic) {
  Field f5 = Field::prime(5);
  EXPECT_EQ((Scalar(f5, 3) * Scalar(f5, 4)).to_string(), "2");
  EXPECT_EQ(Scalar(f5, -1).to_string(), "4");
  EXPECT_EQ(Scalar(f5, 2).inverse().to_string(), "3");
  EXPECT_EQ(Scalar(f5, mpq_class(1, 2)), Scalar(f5, 3));
}

TEST(Scalar, CyclotomicSquareOfZeta4) {
  Field c4 = Field::cyclotomic(4);
  Scalar z = Scalar::zeta(c4);
  EXPECT_EQ(z * z, Scalar(c4, -1));
  EXPECT_EQ((z * z).to_string(), "[-1, 0]");
  EXPECT_EQ(z.pow(4), Scalar::one(c4));
  EXPECT_EQ(z.inverse(), -z);
}

TEST(Scalar, CyclotomicInverseRoundTrip) {
  Field c5 = Field::cyclotomic(5);
  Scalar z = Scalar::zeta(c5);
  Scalar x = Scalar(c5, 2) + z * z - Scalar(c5, mpq_class(3, 7)) * z.pow(3);
  EXPECT_TRUE((x * x.inverse()).is_one());
  EXPECT_EQ(z.pow(5), Scalar::one(c5));
}

TEST(Scalar, Errors) {
  Field q = Field::rationals();
  EXPECT_THROW(Scalar(q, 1) / Scalar(q, 0), Error);
  EXPECT_THROW(Scalar(q, 1) + Scalar(Field::prime(3), 1), Error);
  try {
    (void)(Scalar(q, 1) + Scalar(Field::prime(3), 1));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
  EXPECT_THROW(Field::prime(6), Error);
}

TEST(Scalar, RootsOfUnity) {
  EXPECT_EQ(root_of_unity(Field::prime(5), 4), Scalar(Field::prime(5), 2));
  EXPECT_EQ(root_of_unity(Field::cyclotomic(4), 2), Scalar(Field::cyclotomic(4), -1));
  try {
    root_of_unity(Field::rationals(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSuchRoot);
  }
  // Q(zeta3) = Q(zeta6)
  Scalar z6 = root_of_unity(Field::cyclotomic(3), 6);
  EXPECT_TRUE(z6.pow(6).is_one());
  EXPECT_FALSE(z6.pow(2).is_one());
  EXPECT_FALSE(z6.pow(3).is_one());
}

TEST(Scalar, ParseAndPrint) {
  Field q = Field::rationals();
  EXPECT_EQ(Scalar::parse(q, "-4/6").to_string(), "-2/3");
  Field c4 = Field::cyclotomic(4);
  EXPECT_EQ(Scalar::parse(c4, "[1, -1/2]"), Scalar(c4, 1) - Scalar(c4, mpq_class(1, 2)) * Scalar::zeta(c4));
  EXPECT_EQ(Scalar::parse(Field::prime(3), "5").to_string(), "2");
  EXPECT_EQ(Field::parse("F5"), Field::prime(5));
  EXPECT_EQ(Field::parse("Q(zeta4)"), Field::cyclotomic(4));
}

// Field axioms on random triples over each field kind.
TEST(Scalar, FieldAxiomsRandom) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (Field f : {Field::rationals(), Field::prime(5), Field::cyclotomic(4), Field::cyclotomic(3)}) {
    auto rnd = [&] {
      if (f.kind() == FieldKind::Cyclotomic) {
        Scalar::Poly p;
        for (std::size_t i = 0; i < f.degree(); ++i) p.push_back(mpq_class(d(rng), 1 + std::abs(d(rng))));
        return Scalar::from_poly(f, p);
      }
      if (f.is_finite()) return Scalar(f, static_cast<std::int64_t>(d(rng)));
      return Scalar(f, mpq_class(d(rng), 1 + std::abs(d(rng))));
    };
    for (int trial = 0; trial < 50; ++trial) {
      Scalar a = rnd(), b = rnd(), c = rnd();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
      }
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}
