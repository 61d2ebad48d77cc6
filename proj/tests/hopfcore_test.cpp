#include <gtest/gtest.h>

#include <random>

#include "hopfcleft/fixtures.hpp"
#include "hopfcleft/oracle.hpp"

using namespace hopfcleft;
namespace fx = hopfcleft::fixtures;

namespace {

std::size_t at(const BasedSpace& s, std::vector<std::string> labels) {
  auto i = s.index_of(labels);
  if (!i) throw std::runtime_error("no basis vector");
  return *i;
}

LinearMap random_map(const BasedSpace& s, const BasedSpace& t, std::mt19937& rng) {
  const Field& f = s.field();
  std::uniform_int_distribution<int> d(0, static_cast<int>(f.modulus()) - 1);
  LinearMap m(s, t);
  for (std::size_t c = 0; c < s.dim(); ++c)
    for (std::size_t r = 0; r < t.dim(); ++r) m.set(r, c, Scalar(f, d(rng)));
  return m;
}

void expect_ok(const Report& r) { EXPECT_TRUE(r.ok()) << r.text(); }

}  // namespace

TEST(GroupAlgebra, PassesAllAxioms) {
  for (auto [p, n] : {std::pair{3, 2}, std::pair{5, 4}, std::pair{0, 3}}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    HopfAlgebraData k = fx::group_algebra(f, n);
    expect_ok(check_hopf(k));
  }
}

TEST(GroupAlgebra, AntipodeInvertsGrouplikes) {
  Field f = Field::prime(5);
  HopfAlgebraData k = fx::group_algebra(f, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    auto col = k.antipode.column(a);
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col[0].first, (4 - a) % 4);
    EXPECT_TRUE(col[0].second.is_one());
  }
}

TEST(Bosonization, SmallCasesPass) {
  Bosonization b2 = bosonize(fx::line_c2_f3());
  Bosonization b4 = bosonize(fx::line_c4_f5());
  Bosonization bz = bosonize(fx::line_c4_zeta4());
  EXPECT_EQ(b2.space().dim(), 4u);
  EXPECT_EQ(b4.space().dim(), 8u);
  EXPECT_EQ(bz.space().dim(), 16u);
  for (const auto* b : {&b2, &b4, &bz}) {
    expect_ok(b->report);
    expect_ok(check_hopf(b->hopf));
  }
}

// Δ(x⊗1) = (x⊗1)⊗(1⊗1) + (1⊗g)⊗(x⊗1), so S(x⊗1) = -(1⊗g⁻¹)(x⊗1) = -q⁻¹ x⊗g⁻¹.
TEST(Bosonization, AntipodeOnGeneratorByHand) {
  struct Case {
    GradedYDHopf r;
    std::string ginv;
  };
  for (auto& c : {Case{fx::line_c2_f3(), "g"}, Case{fx::line_c4_f5(), "g3"}}) {
    Bosonization b = bosonize(c.r);
    const BasedSpace& s = b.space();
    const Field& f = s.field();
    // q = -1, so -q⁻¹ = 1.
    LinearMap expected(BasedSpace::unit(f), s);
    expected.set(at(s, {"x", c.ginv}), 0, Scalar::one(f));
    auto col = b.hopf.antipode.column(at(s, {"x", "1"}));
    EXPECT_EQ(col, expected.column(0)) << b.hopf.antipode.describe_column(at(s, {"x", "1"}));
  }
}

TEST(Bosonization, AntipodeMatchesOracle) {
  for (auto r : {fx::line_c2_f3(), fx::line_c4_f5()}) {
    Bosonization b = bosonize(r);
    LinearMap id = LinearMap::identity(b.space());
    OracleInverse o = oracle_convolution_inverse(id, b.hopf.coalgebra(), b.hopf.algebra(), 10000000);
    ASSERT_TRUE(o.inverse.has_value());
    EXPECT_EQ(*o.inverse, b.hopf.antipode);
  }
}

TEST(GroupAlgebra, AntipodeMatchesOracle) {
  Field f = Field::prime(5);
  HopfAlgebraData k = fx::group_algebra(f, 4);
  OracleInverse o = oracle_convolution_inverse(LinearMap::identity(k.space()), k.coalgebra(), k.algebra(), 10000000);
  ASSERT_TRUE(o.inverse.has_value());
  EXPECT_EQ(*o.inverse, k.antipode);
}

TEST(Bialgebra, MonoidHasNoAntipode) {
  BialgebraData m = fx::idempotent_monoid(Field::prime(3));
  expect_ok(check_bialgebra(m));
  try {
    antipode(m);
    FAIL() << "expected NotHopf";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHopf);
  }
  OracleInverse o =
      oracle_convolution_inverse(LinearMap::identity(m.alg.space), m.coalg, m.alg, 1000000);
  EXPECT_FALSE(o.inverse.has_value());
}

TEST(Algebra, CorruptedProductFailsAssociativity) {
  Field f = Field::prime(5);
  AlgebraData a = fx::corrupted_c4(f);
  Report r = check_algebra(a);
  EXPECT_FALSE(r.passed("associativity"));
  // (g·g)·g2 = g·g2 = g3 while g·(g·g2) = g·g3 = 1.
  const Check* c = r.first_failure();
  ASSERT_NE(c, nullptr);
  EXPECT_NE(c->witness.find("g⊗g⊗g2: g3 ≠ 1"), std::string::npos) << c->witness;
}

TEST(Convolution, AssociativeAndUnital) {
  std::mt19937 rng(7);
  Bosonization b = bosonize(fx::line_c2_f3());
  const auto& c = b.hopf.coalgebra();
  const auto& a = b.hopf.algebra();
  LinearMap u = convolution_unit(c, a);
  for (int t = 0; t < 5; ++t) {
    LinearMap f = random_map(b.space(), b.space(), rng), g = random_map(b.space(), b.space(), rng),
              h = random_map(b.space(), b.space(), rng);
    EXPECT_EQ(convolution(convolution(f, g, c, a), h, c, a), convolution(f, convolution(g, h, c, a), c, a));
    EXPECT_EQ(convolution(f, u, c, a), f);
    EXPECT_EQ(convolution(u, f, c, a), f);
  }
}

TEST(Convolution, InverseOfInvertibleMapIsTwoSided) {
  Bosonization b = bosonize(fx::line_c4_f5());
  const auto& c = b.hopf.coalgebra();
  const auto& a = b.hopf.algebra();
  LinearMap inv = convolution_inverse(b.hopf.antipode, c, a);
  EXPECT_EQ(inv, LinearMap::identity(b.space()));
}

TEST(Convolution, NaturalityUnderMorphisms) {
  Bosonization b = bosonize(fx::line_c4_f5());
  const HopfAlgebraData& k = b.ambient();
  // 1⊗h: K → 𝓗 is a Hopf morphism; ε_R⊗id: 𝓗 → K is an algebra morphism.
  LinearMap jk = b.j_k();
  LinearMap proj = tensor_map(b.r.r.hopf.counit(), k.space());
  LinearMap id = LinearMap::identity(b.space());
  Report r = check_conv_naturality(proj, id, b.hopf.antipode, jk, b.hopf.coalgebra(), b.hopf.algebra(),
                                   k.coalgebra(), k.algebra());
  expect_ok(r);
}

// In a Hopf algebra of a braided category S is a braided antimorphism: μ(S⊗S)c = Sμ.
TEST(YDHopf, AntipodeIsBraidedAntimorphism) {
  for (auto g : {fx::line_c2_f3(), fx::line_c4_f5(), fx::line_c4_zeta4()}) {
    const YDHopf& r = g.r;
    const LinearMap& s = r.hopf.antipode;
    EXPECT_EQ(compose(r.hopf.mul(), tensor_op(s, s), braiding(r.obj, r.obj.module)), compose(s, r.hopf.mul()));
    expect_ok(check_yd_hopf(r));
  }
}

TEST(YDHopf, QuantumLineRejectsBadParameters) {
  Field f = Field::prime(5);
  EXPECT_THROW(fx::quantum_line(f, 4, Scalar(f, 2), 2), Error);  // 2 has order 4, not 2
  EXPECT_THROW(fx::quantum_line(f, 3, Scalar(f, -1), 2), Error);  // (-1)^3 != 1
}
