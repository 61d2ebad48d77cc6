#include <gtest/gtest.h>

#include "hopfcleft/fixtures.hpp"
#include "hopfcleft/oracle.hpp"

using namespace hopfcleft;
namespace fx = hopfcleft::fixtures;

namespace {

void expect_ok(const Report& r) { EXPECT_TRUE(r.ok()) << r.text(); }

std::vector<Cocycle> all_cocycles() {
  std::vector<Cocycle> out;
  for (auto g : {fx::line_c2_f3(), fx::line_c4_f5()})
    for (auto& c : enumerate_cocycles(unit_measuring(g.r), 1000000)) out.push_back(c);
  GradedYDHopf g = fx::line_c2_f3();
  for (auto& c : enumerate_cocycles(fx::trivial_measuring(g.r, fx::sign_algebra(g.r.base())), 1000000))
    out.push_back(c);
  return out;
}

}  // namespace

TEST(Cleft, RoundTripForEveryCocycle) {
  auto cs = all_cocycles();
  ASSERT_EQ(cs.size(), 3u + 5u + 3u);
  for (const Cocycle& c : cs) expect_ok(round_trip_check(c));
}

TEST(Cleft, IsoToCrossedForFixtureExtensions) {
  for (const Cocycle& c : all_cocycles()) {
    CleftExtension e = functor_F(c);
    expect_ok(check_cleft(e));
    expect_ok(section_inverse_coaction_check(e));
    CrossedIso iso = iso_to_crossed(e);
    expect_ok(iso.report);
  }
}

TEST(Cleft, CrossedProductsOverTheUnitAreCleftObjects) {
  GradedYDHopf g = fx::line_c4_f5();
  for (const Cocycle& c : enumerate_cocycles(unit_measuring(g.r), 1000000)) {
    CleftExtension e = functor_F(c);
    EXPECT_TRUE(is_cleft_object(e));
    CoinvariantMeasuring cm = coinvariant_measuring(e);
    EXPECT_EQ(cm.m.a.alg.space.dim(), 1u);
  }
  Measuring sm = fx::trivial_measuring(g.r, fx::sign_algebra(g.r.base()));
  CleftExtension e = functor_F(make_cocycle(sm, trivial_sigma(sm)));
  EXPECT_FALSE(is_cleft_object(e));
  EXPECT_EQ(coinvariants(e.b).alg.alg.space.dim(), 2u);
}

// Rescaling γ by 2 and normalizing gives γ back: γ' = γ'^{-1}(1)γ' = ½·2γ.
TEST(Cleft, SectionNormalization) {
  GradedYDHopf g = fx::line_c2_f3();
  Cocycle c = make_cocycle(unit_measuring(g.r), fx::line_pi(g.r, Scalar::one(g.r.field())));
  CleftExtension e = functor_F(c);
  LinearMap scaled = Scalar(g.r.field(), 2) * e.section;
  EXPECT_NE(compose(scaled, g.r.hopf.unit()), e.alg().unit);
  CleftExtension n = make_cleft(e.b, scaled);
  EXPECT_TRUE(n.normalized);
  EXPECT_EQ(n.section, e.section);
  EXPECT_EQ(n.section_inv, e.section_inv);
  expect_ok(check_cleft(n));
}

TEST(Cleft, SectionMustBeColinear) {
  GradedYDHopf g = fx::line_c2_f3();
  CleftExtension e = functor_F(make_cocycle(unit_measuring(g.r), fx::line_pi(g.r, Scalar::zero(g.r.field()))));
  LinearMap bad = e.section;
  bad.set(0, 1, Scalar::one(g.r.field()));  // x ↦ x + 1
  EXPECT_FALSE(check_section_morphism(e.b, bad).ok());
  EXPECT_THROW(make_cleft(e.b, bad), Error);
}

// t ↦ -t on A = span{1, t} commutes with the trivial measuring and fixes σ_λ = λ·1 at x⊗x.
TEST(Cleft, FunctorsOnMorphisms) {
  GradedYDHopf g = fx::line_c2_f3();
  DAlgebra a = fx::sign_algebra(g.r.base());
  Measuring m = fx::trivial_measuring(g.r, a);
  LinearMap neg = LinearMap::identity(a.alg.space);
  neg.set(1, 1, -Scalar::one(g.r.field()));
  for (const Cocycle& c : enumerate_cocycles(m, 1000000)) expect_ok(functor_morphism_check(neg, c, c));
  // The zero map is not an algebra morphism.
  Cocycle c = make_cocycle(m, trivial_sigma(m));
  EXPECT_FALSE(check_cocycle_morphism(LinearMap(a.alg.space, a.alg.space), c, c).ok());
}

TEST(Cleft, CoinvariantsOfTrivialCoactionIsEverything) {
  GradedYDHopf g = fx::line_c2_f3();
  DAlgebra a = fx::sign_algebra(g.r.base());
  ComoduleAlgebra ca{g.r, a, tensor_map(a.alg.space, g.r.hopf.unit())};
  expect_ok(check_comodule_algebra(ca));
  EXPECT_EQ(coinvariants(ca).alg.alg.space.dim(), 2u);
}

// 𝓔#K over the 8-dimensional bosonization: f and g are explicit mutually inverse 8×8 matrices.
TEST(Cleft, EightDimensionalIsomorphism) {
  GradedYDHopf g = fx::line_c4_f5();
  Bosonization b = bosonize(g);
  Cocycle pi = make_cocycle(unit_measuring(g.r), fx::line_pi(g.r, Scalar(g.r.field(), 2)));
  CleftExtension e = psi(b, functor_F(pi));
  CrossedIso iso = iso_to_crossed(e);
  EXPECT_EQ(iso.f.source().dim(), 8u);
  EXPECT_EQ(iso.f.target().dim(), 8u);
  EXPECT_EQ(compose(iso.f, iso.g), LinearMap::identity(iso.g.source()));
  EXPECT_EQ(compose(iso.g, iso.f), LinearMap::identity(iso.f.source()));
  EXPECT_EQ(rank(iso.f), 8u);
}
