#pragma once

/**
 * @file cleft.hpp
 * @brief Cleft extensions, the cocycle σ_γ of a section, and the two functors between
 * cocycle data (A, σ) and cleft extensions with section (B, γ).
 */

#include <string>

#include "hopfcleft/cocycle.hpp"

namespace hopfcleft {

struct CleftExtension {
  ComoduleAlgebra b;
  LinearMap section;      // γ: H̄ → B
  LinearMap section_inv;  // γ^{-1}
  bool normalized = false;

  const YDHopf& h() const { return b.h; }
  const AlgebraData& alg() const { return b.b.alg; }
};

/// γ is a K-linear comodule morphism.
inline Report check_section_morphism(const ComoduleAlgebra& b, const LinearMap& gamma) {
  Report r("section " + gamma.signature());
  r.equal("section colinear", compose(b.coaction, gamma), compose(tensor_op(gamma, b.h.space()), b.h.hopf.comul()));
  r.merge(check_module_morphism(gamma, b.h.obj.module, b.b.obj), "section");
  return r;
}

inline Report check_cleft(const CleftExtension& e) {
  Report r("cleft extension " + e.alg().space.name());
  r.merge(check_comodule_algebra(e.b));
  r.merge(check_section_morphism(e.b, e.section));
  const CoalgebraData& hc = e.h().hopf.coalgebra();
  LinearMap u = convolution_unit(hc, e.alg());
  r.equal("section * inverse", convolution(e.section, e.section_inv, hc, e.alg()), u);
  r.equal("inverse * section", convolution(e.section_inv, e.section, hc, e.alg()), u);
  if (e.normalized) {
    r.equal("section unital", compose(e.section, e.h().hopf.unit()), e.alg().unit);
    r.equal("section inverse unital", compose(e.section_inv, e.h().hopf.unit()), e.alg().unit);
  }
  return r;
}

/// γ' = μ_B(γ^{-1}⊗γ)(η̄⊗id) with inverse μ_B(γ^{-1}⊗γ)(id⊗η̄).
inline CleftExtension normalize_section(const CleftExtension& e) {
  const LinearMap& mu = e.alg().mul;
  const LinearMap& hu = e.h().hopf.unit();
  LinearMap g = compose(mu, tensor_op(compose(e.section_inv, hu), e.section));
  LinearMap gi = compose(mu, tensor_op(e.section_inv, compose(e.section, hu)));
  CleftExtension out{e.b, g, gi, true};
  if (compose(g, hu) != e.alg().unit) fail(ErrorKind::TheoremViolation, "normalized section is not unital");
  return out;
}

/// Builds a cleft extension from a comodule algebra and a section; the section is
/// normalized on ingestion. NotInvertible if γ has no convolution inverse.
inline CleftExtension make_cleft(const ComoduleAlgebra& b, const LinearMap& gamma) {
  Report r = check_section_morphism(b, gamma);
  if (const Check* f = r.first_failure()) fail(ErrorKind::AxiomFailure, f->name + ": " + f->witness);
  LinearMap inv = convolution_inverse(gamma, b.h.hopf.coalgebra(), b.b.alg);
  return normalize_section({b, gamma, inv, false});
}

/// ρ_B γ^{-1} = (γ^{-1}⊗S̄)c_{H,H̄}Δ̄.
inline Report section_inverse_coaction_check(const CleftExtension& e) {
  Report r("section inverse coaction");
  const YDHopf& h = e.h();
  r.equal("coaction of section inverse", compose(e.b.coaction, e.section_inv),
          compose(tensor_op(e.section_inv, h.hopf.antipode), braiding(h.obj, h.obj.module), h.hopf.comul()));
  return r;
}

inline bool is_cleft_object(const CleftExtension& e) { return coinvariants(e.b).alg.alg.space.dim() == 1; }

/// A#_σH̄ with section η_A⊗id and the explicit inverse c_{H,A}(id⊗σ^{-1})(S̄⊗S̄⊗id)Δ̄².
inline CleftExtension crossed_to_cleft(const CrossedProduct& cp) {
  const Measuring& m = cp.cocycle.m;
  const BasedSpace& hs = m.h.space();
  LinearMap gamma = tensor_map(m.a.alg.unit, hs);
  const LinearMap& s = m.h.hopf.antipode;
  LinearMap inv = compose(braiding(m.h.obj, m.a.obj), tensor_op(hs, cp.cocycle.sigma_inv), tensor_op(s, s, hs),
                          iterated_comul(m.h.hopf.coalgebra(), 2));
  CleftExtension e{cp.comod, gamma, inv, true};
  Report r = check_cleft(e);
  if (const Check* f = r.first_failure())
    fail(ErrorKind::TheoremViolation, "crossed product is not cleft: " + f->name + " " + f->witness);
  return e;
}

struct CoinvariantMeasuring {
  Measuring m;
  LinearMap iota;  // B^co → B
};

/// B^co with ν determined by ι ν = μ_B²(γ⊗id⊗γ^{-1})(id⊗c_{H,B})(Δ̄⊗ι).
inline CoinvariantMeasuring coinvariant_measuring(const CleftExtension& e, const std::string& name = "Bco") {
  if (!e.normalized) fail(ErrorKind::ValidationError, "coinvariant measuring needs a normalized section");
  Coinvariants co = coinvariants(e.b, name);
  const YDHopf& h = e.h();
  const LinearMap& mu = e.alg().mul;
  LinearMap composite = compose(mu, tensor_op(mu, e.alg().space), tensor_op(e.section, e.alg().space, e.section_inv),
                                tensor_op(h.space(), braiding(h.obj, e.b.b.obj)), tensor_op(h.hopf.comul(), co.iota));
  LinearMap nu = factor_through(co.iota, composite);
  return {{h, co.alg, nu}, co.iota};
}

struct SectionCocycle {
  Cocycle cocycle;           // σ_γ on the coinvariant measuring
  LinearMap iota;            // B^co → B
  LinearMap sigma_tilde;     // (μ_B(γ⊗γ)) ∗ (γ^{-1}μ̄)
  Report report;
};

/// σ_γ: factor σ̃ through the coinvariants, build its inverse from π̃, and verify.
inline SectionCocycle cocycle_from_section(const CleftExtension& e, const std::string& name = "Bco") {
  CoinvariantMeasuring cm = coinvariant_measuring(e, name);
  const YDHopf& h = e.h();
  const BasedSpace& hs = h.space();
  const AlgebraData& b = e.alg();
  CoalgebraData hh = hh_coalgebra(h).coalg;
  LinearMap st = convolution(compose(b.mul, tensor_op(e.section, e.section)), compose(e.section_inv, h.hopf.mul()),
                             hh, b);
  LinearMap pt = convolution(compose(e.section, h.hopf.mul()),
                             compose(b.mul, tensor_op(e.section_inv, e.section_inv), braiding(h.obj, h.obj.module)),
                             hh, b);
  Report r("cocycle of section");
  LinearMap unit_h = tensor_map(b.space, h.hopf.unit());
  r.equal("sigma-tilde coinvariant", compose(e.b.coaction, st), compose(unit_h, st));
  r.equal("pi-tilde coinvariant", compose(e.b.coaction, pt), compose(unit_h, pt));
  LinearMap sigma = factor_through(cm.iota, st);
  LinearMap pi = factor_through(cm.iota, pt);
  const AlgebraData& co = cm.m.a.alg;
  LinearMap u = convolution_unit(hh, co);
  r.equal("sigma * pi", convolution(sigma, pi, hh, co), u);
  r.equal("pi * sigma", convolution(pi, sigma, hh, co), u);
  r.merge(check_measuring(cm.m), "coinvariant measuring");
  Report axioms = check_cocycle(cm.m, sigma);
  r.merge(axioms, "sigma_gamma");
  if (const Check* f = r.first_failure())
    fail(ErrorKind::TheoremViolation, "cocycle of a section: " + f->name + " " + f->witness);
  (void)hs;
  return {{cm.m, sigma, pi, true}, cm.iota, st, r};
}

struct CrossedIso {
  SectionCocycle sc;
  CrossedProduct cp;  // B^co #_{σ_γ} H̄
  LinearMap f;        // μ_B(ι⊗γ): B^co⊗H̄ → B
  LinearMap g;        // (α⊗id)ρ_B
  Report report;
};

/// The isomorphism B^co#_{σ_γ}H̄ ≅ B together with its inverse, fully verified.
inline CrossedIso iso_to_crossed(const CleftExtension& e) {
  SectionCocycle sc = cocycle_from_section(e);
  CrossedProduct cp = crossed_product(sc.cocycle);
  const YDHopf& h = e.h();
  const AlgebraData& b = e.alg();
  const LinearMap& iota = sc.iota;
  LinearMap f = compose(b.mul, tensor_op(iota, e.section));
  LinearMap alpha = factor_through(iota, compose(b.mul, tensor_op(b.space, e.section_inv), e.b.coaction));
  LinearMap g = compose(tensor_op(alpha, h.space()), e.b.coaction);
  Report r("isomorphism to crossed product");
  r.equal("fg = id", compose(f, g), LinearMap::identity(b.space));
  r.equal("gf = id", compose(g, f), LinearMap::identity(f.source()));
  r.merge(check_algebra_morphism(f, cp.comod.b.alg, b), "f");
  r.equal("f colinear", compose(e.b.coaction, f), compose(tensor_op(f, h.space()), cp.comod.coaction));
  r.merge(check_module_morphism(f, cp.comod.b.obj, e.b.b.obj), "f");
  r.equal("f compatible with sections", compose(f, tensor_op(sc.cocycle.m.a.alg.unit, h.space())), e.section);
  if (const Check* fl = r.first_failure())
    fail(ErrorKind::TheoremViolation, "isomorphism to crossed product: " + fl->name + " " + fl->witness);
  return {sc, cp, f, g, r};
}

/// F(A, σ) = (A#_σH̄, η_A⊗id).
inline CleftExtension functor_F(const Cocycle& c) { return crossed_to_cleft(crossed_product(c)); }

/// F on a morphism f: (A,σ) → (A',σ') is f⊗id.
inline LinearMap functor_F(const LinearMap& f, const Cocycle& c) { return tensor_map(f, c.m.h.space()); }

/// G(B, γ) = (B^co, σ_γ).
inline SectionCocycle functor_G(const CleftExtension& e) { return cocycle_from_section(e); }

/// G on a morphism f: (B,γ) → (B',γ'): the unique map with ι' G(f) = f ι.
inline LinearMap functor_G(const LinearMap& f, const SectionCocycle& src, const SectionCocycle& dst) {
  return factor_through(dst.iota, compose(f, src.iota));
}

/// Morphism of cocycle data: measuring morphism with f σ = σ'.
inline Report check_cocycle_morphism(const LinearMap& f, const Cocycle& a, const Cocycle& b) {
  Report r = check_measuring_morphism(f, a.m, b.m);
  r.equal("f sigma = sigma'", compose(f, a.sigma), b.sigma);
  return r;
}

/// Morphism of cleft extensions with sections: colinear algebra morphism with f γ = γ'.
inline Report check_cleft_morphism(const LinearMap& f, const CleftExtension& a, const CleftExtension& b) {
  Report r = check_algebra_morphism(f, a.alg(), b.alg());
  r.equal("colinear", compose(b.b.coaction, f), compose(tensor_op(f, a.h().space()), a.b.coaction));
  r.merge(check_module_morphism(f, a.b.b.obj, b.b.b.obj));
  r.equal("f gamma = gamma'", compose(f, a.section), b.section);
  return r;
}

/// GF = id on the nose (after identifying A with (A#_σH̄)^co through id⊗η̄) and
/// FG ≅ id through the isomorphism to the crossed product.
inline Report round_trip_check(const Cocycle& c) {
  Report r("round trip");
  CleftExtension e = functor_F(c);
  SectionCocycle g = functor_G(e);
  const Measuring& m = c.m;
  LinearMap j = factor_through(g.iota, tensor_map(m.a.alg.space, m.h.hopf.unit()));
  r.add("coinvariants identified with A", j.source().dim() == j.target().dim() && rank(j) == j.source().dim());
  r.merge(check_measuring_morphism(j, m, g.cocycle.m), "identification");
  r.equal("GF(sigma) = sigma", compose(j, c.sigma), g.cocycle.sigma);
  CrossedIso iso = iso_to_crossed(e);
  r.merge(iso.report, "FG");
  r.equal("FG iso is the identity", compose(iso.f, tensor_op(j, m.h.space())), LinearMap::identity(e.alg().space));
  return r;
}

/// Naturality for an 𝒜-morphism f: (A,σ) → (A',σ'): F(f) is a ℬ-morphism and G(F(f))
/// corresponds to f under the identifications of coinvariants.
inline Report functor_morphism_check(const LinearMap& f, const Cocycle& a, const Cocycle& b) {
  Report r("functors on morphisms");
  r.merge(check_cocycle_morphism(f, a, b), "input");
  CleftExtension ea = functor_F(a), eb = functor_F(b);
  LinearMap ff = functor_F(f, a);
  r.merge(check_cleft_morphism(ff, ea, eb), "F(f)");
  SectionCocycle ga = functor_G(ea), gb = functor_G(eb);
  LinearMap gf = functor_G(ff, ga, gb);
  r.merge(check_cocycle_morphism(gf, ga.cocycle, gb.cocycle), "GF(f)");
  LinearMap ja = factor_through(ga.iota, tensor_map(a.m.a.alg.space, a.m.h.hopf.unit()));
  LinearMap jb = factor_through(gb.iota, tensor_map(b.m.a.alg.space, b.m.h.hopf.unit()));
  r.equal("naturality square", compose(gf, ja), compose(jb, f));
  return r;
}

}  // namespace hopfcleft
