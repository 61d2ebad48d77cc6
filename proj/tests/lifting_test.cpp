#include <gtest/gtest.h>

#include <algorithm>

#include "hopfcleft/census.hpp"
#include "hopfcleft/fixtures.hpp"

using namespace hopfcleft;
namespace fx = hopfcleft::fixtures;

namespace {

void expect_ok(const Report& r) { EXPECT_TRUE(r.ok()) << r.text(); }

std::size_t at(const BasedSpace& s, std::vector<std::string> labels) { return s.index_of(labels).value(); }

std::string fact(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.facts())
    if (k == key) return v;
  return {};
}

}  // namespace

class LiftingTest : public ::testing::TestWithParam<int> {
 protected:
  GradedYDHopf line() const { return GetParam() == 2 ? fx::line_c2_f3() : fx::line_c4_f5(); }
};

TEST_P(LiftingTest, PhiIsBijectionOntoZprime) {
  Bosonization b = bosonize(line());
  std::vector<Cocycle> zr = enumerate_cocycles(unit_measuring(b.r.r), 1000000);
  std::vector<ScalarCocycleH> zp = enumerate_Zprime(b, 1000000);
  ASSERT_EQ(zr.size(), zp.size());
  for (const Cocycle& pi : zr) {
    ScalarCocycleH s = phi(b, pi);
    EXPECT_TRUE(s.in_Zprime);
    expect_ok(s.report);
    EXPECT_EQ(phi_inverse(b, s).sigma, pi.sigma);
    EXPECT_TRUE(std::any_of(zp.begin(), zp.end(), [&](const auto& z) { return z.sigma == s.sigma; }));
  }
  for (const ScalarCocycleH& z : zp) EXPECT_EQ(phi(b, phi_inverse(b, z)).sigma, z.sigma);
}

TEST_P(LiftingTest, SquareCommutes) {
  Bosonization b = bosonize(line());
  for (const Cocycle& pi : enumerate_cocycles(unit_measuring(b.r.r), 1000000)) {
    CleftExtension e = psi(b, functor_F(pi));
    expect_ok(check_cleft(e));
    EXPECT_TRUE(is_cleft_object(e));
    expect_ok(check_Cprime_section(b, e));
    EXPECT_EQ(sigma_gamma_restricts(b, e).sigma, phi(b, pi).sigma);
  }
}

TEST_P(LiftingTest, DeformationsAreHopfAndGradedComparisonHolds) {
  Bosonization b = bosonize(line());
  const Field& f = b.space().field();
  for (std::int64_t l = 0; l < f.modulus(); ++l) {
    Cocycle pi = make_cocycle(unit_measuring(b.r.r), fx::line_pi(b.r.r, Scalar(f, l)));
    HopfAlgebraData d = deform(b, phi(b, pi));
    expect_ok(check_hopf(d));
    Report g = gr_check(b, d);
    expect_ok(g);
  }
}

INSTANTIATE_TEST_SUITE_P(Lines, LiftingTest, ::testing::Values(2, 4));

// μ_σ(X,X) with X = x⊗1, Δ²X = X⊗1⊗1 + G⊗X⊗1 + G⊗G⊗X, G = 1⊗g: only the outer terms
// survive, giving σ(X,X)·1 + σ⁻¹(X,X)·G² = λ(1⊗1 - 1⊗g²) since π⁻¹(x,x) = -λ.
TEST(Lifting, CorrectionOnGeneratorByHand) {
  Bosonization b = bosonize(fx::line_c4_f5());
  const BasedSpace& s = b.space();
  const Field& f = s.field();
  const std::size_t d = s.dim();
  const std::size_t x = at(s, {"x", "1"});
  for (std::int64_t l = 0; l < 5; ++l) {
    Scalar lam(f, l);
    Cocycle pi = make_cocycle(unit_measuring(b.r.r), fx::line_pi(b.r.r, lam));
    EXPECT_EQ(pi.sigma_inv.entry(0, 3), -lam);
    HopfAlgebraData dh = deform(b, phi(b, pi));
    LinearMap expected(BasedSpace::unit(f), s);
    expected.set(at(s, {"1", "1"}), 0, lam);
    expected.set(at(s, {"1", "g2"}), 0, -lam);
    EXPECT_EQ(dh.mul().column(x * d + x), expected.column(0)) << dh.mul().describe_column(x * d + x);
    Report g = gr_check(b, dh);
    const std::string n = fact(g, "products with lower-degree corrections");
    if (l == 0)
      EXPECT_EQ(n, "0");
    else
      EXPECT_NE(n, "0");
  }
}

// Over kC_2 the same formula gives λ(1 - g²) = 0, so nothing is corrected.
TEST(Lifting, NoCorrectionsOverC2) {
  Bosonization b = bosonize(fx::line_c2_f3());
  for (std::int64_t l = 0; l < 3; ++l) {
    Cocycle pi = make_cocycle(unit_measuring(b.r.r), fx::line_pi(b.r.r, Scalar(b.space().field(), l)));
    Report g = gr_check(b, deform(b, phi(b, pi)));
    EXPECT_EQ(fact(g, "products with lower-degree corrections"), "0");
  }
}

TEST(Lifting, ZprimeRelationsDetectViolations) {
  Bosonization b = bosonize(fx::line_c4_f5());
  const BasedSpace& s = b.space();
  const Field& f = s.field();
  Cocycle pi = make_cocycle(unit_measuring(b.r.r), fx::line_pi(b.r.r, Scalar::one(f)));
  LinearMap sigma = phi(b, pi).sigma;
  LinearMap bad = sigma;
  bad.set(0, at(s, {"x", "1"}) * s.dim() + at(s, {"1", "g"}), Scalar::one(f));
  ScalarCocycleH z = check_Zprime(b, bad);
  EXPECT_FALSE(z.in_Zprime);
  EXPECT_FALSE(z.report.passed("restriction relation"));
  EXPECT_THROW(phi_inverse(b, z), Error);
}

// A gauge transform by v = ε + δ_{x⊗1} stays a cocycle but leaves Z'(𝓗).
TEST(Lifting, GaugeTransformLeavesZprime) {
  Bosonization b = bosonize(fx::line_c4_f5());
  const BasedSpace& s = b.space();
  const Field& f = s.field();
  Cocycle pi = make_cocycle(unit_measuring(b.r.r), fx::line_pi(b.r.r, Scalar::zero(f)));
  LinearMap v = b.hopf.counit();
  v.set(0, at(s, {"x", "1"}), Scalar::one(f));
  LinearMap sv = gauge_transform(b.hopf, phi(b, pi).sigma, v);
  ScalarCocycleH z = check_Zprime(b, sv);
  EXPECT_TRUE(z.in_Z);
  EXPECT_FALSE(z.in_Zprime);
  expect_ok(check_classical_cocycle_identity(b.hopf, sv));
  expect_ok(gr_check(b, deform(b, z)));
}

TEST(Lifting, BosonizationGradingIsConnected) {
  GradedYDHopf g = fx::line_c4_zeta4();
  expect_ok(check_graded_yd_hopf(g));
  Bosonization b = bosonize(g);
  EXPECT_EQ(b.grading.max_degree(b.space()), 3);
  GradedYDHopf bad = g;
  bad.grading.by_atom["R"] = {0, 0, 2, 3};
  EXPECT_FALSE(check_graded_yd_hopf(bad).ok());
  EXPECT_THROW(bosonize(bad), Error);
}

// Doubling γ on 1⊗g breaks γ(1⊗g·1⊗g) = γ(1⊗g)γ(1⊗g) since 1⊗g2 is left alone.
TEST(Lifting, TwistedSectionBreaksSectionRelation) {
  Bosonization b = bosonize(fx::line_c4_f5());
  const Field& f = b.space().field();
  Cocycle pi = make_cocycle(unit_measuring(b.r.r), fx::line_pi(b.r.r, Scalar::one(f)));
  CleftExtension e = psi(b, functor_F(pi));
  expect_ok(check_Cprime_section(b, e));
  std::size_t g = at(b.space(), {"1", "g"});
  for (const auto& [row, v] : e.section.column(g)) e.section.set(row, g, v * Scalar(f, 2));
  Report r = check_Cprime_section(b, e);
  EXPECT_FALSE(r.passed("section relation"));
  EXPECT_FALSE(r.first_failure()->witness.empty());
}
