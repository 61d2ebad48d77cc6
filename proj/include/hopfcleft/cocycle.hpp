#pragma once

/**
 * @file cocycle.hpp
 * @brief Two-cocycles σ: H̄⊗H̄ → A over a measuring and the crossed product A#_σH̄.
 *
 * All convolutions on H̄⊗H̄ (and H̄⊗H̄⊗H̄) use the braided coalgebra structure
 * (id⊗c_{H,H}⊗id)(Δ⊗Δ), never the plain flip.
 */

#include <string>

#include "hopfcleft/braidmod.hpp"

namespace hopfcleft {

struct Cocycle {
  Measuring m;
  LinearMap sigma;      // H̄⊗H̄ → A
  LinearMap sigma_inv;  // its convolution inverse
  bool verified = false;
};

inline YDCoalgebra hh_coalgebra(const YDHopf& h) { return coalgebra_power(h, 2); }

/// η_A(ε̄⊗ε̄).
inline LinearMap trivial_sigma(const Measuring& m) {
  return compose(m.a.alg.unit, tensor_op(m.h.hopf.counit(), m.h.hopf.counit()));
}

/// σ̂ = (σ⊗μ̄)Δ_{H̄⊗H̄}: H̄⊗H̄ → A⊗H̄.
inline LinearMap sigma_hat(const Measuring& m, const LinearMap& sigma) {
  return compose(tensor_op(sigma, m.h.hopf.mul()), hh_coalgebra(m.h).coalg.comul);
}

/// μ_σ = (μ_A⊗id)(μ_A⊗σ̂)(id_A⊗c^ν⊗id_H): A⊗H̄⊗A⊗H̄ → A⊗H̄.
inline LinearMap mu_sigma(const Measuring& m, const LinearMap& sigma) {
  const BasedSpace& as = m.a.alg.space;
  const BasedSpace& hs = m.h.space();
  return compose(tensor_op(m.a.alg.mul, hs), tensor_op(m.a.alg.mul, sigma_hat(m, sigma)),
                 tensor_op(as, c_nu(m), hs));
}

/// (id⊗ε̄)μ_σ(η_A⊗id⊗η_A⊗id); equals σ for every cocycle.
inline LinearMap recover_sigma(const Measuring& m, const LinearMap& sigma) {
  const BasedSpace& hs = m.h.space();
  return compose(tensor_op(m.a.alg.space, m.h.hopf.counit()), mu_sigma(m, sigma),
                 tensor_op(m.a.alg.unit, hs, m.a.alg.unit, hs));
}

/// The module structure of H̄⊗H̄ in 𝒟.
inline HModule hh_module(const YDHopf& h) { return tensor_modules(h.obj.module, h.obj.module); }

/// Defining relations of a cocycle plus the derived identities that follow from them.
/// Derived identities are only evaluated when σ is convolution invertible.
inline Report check_cocycle(const Measuring& m, const LinearMap& sigma, LinearMap* inverse_out = nullptr) {
  Report r("cocycle " + sigma.signature());
  const BasedSpace& hs = m.h.space();
  const BasedSpace& as = m.a.alg.space;
  const BasedSpace hh = tensor(hs, hs);
  if (sigma.source() != hh || sigma.target() != as)
    fail(ErrorKind::ShapeMismatch, "cocycle must map H⊗H → A, got " + sigma.signature());
  const LinearMap& mu = m.a.alg.mul;
  const LinearMap& eta = m.a.alg.unit;
  const LinearMap& eps = m.h.hopf.counit();
  const LinearMap& hmul = m.h.hopf.mul();
  const LinearMap& hunit = m.h.hopf.unit();
  LinearMap cn = c_nu(m);
  LinearMap shat = sigma_hat(m, sigma);

  r.merge(check_module_morphism(sigma, hh_module(m.h), m.a.obj), "sigma");
  r.equal("cocycle condition", compose(mu, tensor_op(as, sigma), tensor_op(shat, hs)),
          compose(mu, tensor_op(as, sigma), tensor_op(cn, hs), tensor_op(hs, shat)));
  r.equal("twisted module condition", compose(mu, tensor_op(as, m.nu), tensor_op(shat, as)),
          compose(mu, tensor_op(as, sigma), tensor_op(cn, hs), tensor_op(hs, cn)));
  r.equal("normalization", compose(sigma, tensor_op(hunit, hunit)), eta);

  CoalgebraData c2 = hh_coalgebra(m.h).coalg;
  LinearMap inv(hh, as);
  bool invertible = true;
  try {
    inv = convolution_inverse(sigma, c2, m.a.alg);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInvertible) throw;
    invertible = false;
  }
  r.add("sigma convolution invertible", invertible, invertible ? "" : "no two-sided convolution inverse");
  if (!invertible) return r;
  if (inverse_out) *inverse_out = inv;

  CoalgebraData c3 = coalgebra_power(m.h, 3).coalg;
  const AlgebraData& a = m.a.alg;
  auto conv = [&](const LinearMap& f, const LinearMap& g) { return convolution(f, g, c3, a); };
  LinearMap s_eps = tensor_map(sigma, eps), sinv_eps = tensor_map(inv, eps);
  LinearMap s_ml = compose(sigma, tensor_op(hmul, hs)), s_mr = compose(sigma, tensor_op(hs, hmul));
  LinearMap si_ml = compose(inv, tensor_op(hmul, hs)), si_mr = compose(inv, tensor_op(hs, hmul));
  LinearMap nu_s = compose(m.nu, tensor_op(hs, sigma)), nu_si = compose(m.nu, tensor_op(hs, inv));
  r.equal("derived: cocycle condition in convolution form", conv(s_eps, s_ml), conv(nu_s, s_mr));
  r.equal("derived: left inverse form", conv(s_ml, si_mr), conv(sinv_eps, nu_s));
  r.equal("derived: right inverse form", conv(s_mr, si_ml), conv(nu_si, s_eps));
  LinearMap eta_eps = compose(eta, eps);
  r.equal("derived: sigma unital on the left", compose(sigma, tensor_op(hunit, hs)), eta_eps);
  r.equal("derived: sigma unital on the right", compose(sigma, tensor_op(hs, hunit)), eta_eps);
  r.equal("derived: inverse unital on the left", compose(inv, tensor_op(hunit, hs)), eta_eps);
  r.equal("derived: inverse unital on the right", compose(inv, tensor_op(hs, hunit)), eta_eps);
  return r;
}

/// Verified cocycle, or NotInvertible / AxiomFailure naming the first failing relation.
inline Cocycle make_cocycle(const Measuring& m, const LinearMap& sigma) {
  LinearMap inv(sigma.source(), sigma.target());
  Report r = check_cocycle(m, sigma, &inv);
  if (!r.passed("sigma convolution invertible"))
    fail(ErrorKind::NotInvertible, "sigma is not convolution invertible");
  if (const Check* f = r.first_failure()) fail(ErrorKind::AxiomFailure, f->name + ": " + f->witness);
  return {m, sigma, inv, true};
}

/// The algebra candidate (A⊗H̄, μ_σ, η_A⊗η̄) as an object of 𝒟.
inline DAlgebra crossed_algebra(const Measuring& m, const LinearMap& sigma) {
  return {{tensor(m.a.alg.space, m.h.space()), mu_sigma(m, sigma), tensor_map(m.a.alg.unit, m.h.hopf.unit())},
          tensor_modules(m.a.obj, m.h.obj.module)};
}

/// Associativity, unitality and K-linearity of μ_σ tested directly.
inline Report check_mu_sigma_associativity(const Measuring& m, const LinearMap& sigma) {
  DAlgebra d = crossed_algebra(m, sigma);
  Report r = check_algebra(d.alg);
  r.merge(check_module_morphism(d.alg.mul, tensor_modules(d.obj, d.obj), d.obj), "multiplication");
  return r;
}

/// Runs both sides of the cocycle/associativity equivalence on a convolution-invertible σ;
/// throws TheoremViolation when they disagree. Returns whether σ is a cocycle.
inline bool cocycle_iff_associative(const Measuring& m, const LinearMap& sigma) {
  Report axioms = check_cocycle(m, sigma);
  if (!axioms.passed("sigma convolution invertible"))
    fail(ErrorKind::NotInvertible, "equivalence needs a convolution invertible sigma");
  const bool is_cocycle = axioms.ok();
  const bool is_assoc = check_mu_sigma_associativity(m, sigma).ok();
  if (is_cocycle != is_assoc)
    fail(ErrorKind::TheoremViolation, std::string("cocycle check says ") + (is_cocycle ? "yes" : "no") +
                                          " but associativity check says " + (is_assoc ? "yes" : "no"));
  return is_cocycle;
}

struct CrossedProduct {
  Cocycle cocycle;
  ComoduleAlgebra comod;  // A⊗H̄ with μ_σ and coaction id_A⊗Δ̄
  Report report;
};

/// A#_σH̄ as an H̄-comodule algebra. The two intermediate identities used for
/// associativity are asserted on the way.
inline CrossedProduct crossed_product(const Cocycle& c) {
  if (!c.verified) fail(ErrorKind::ValidationError, "crossed product needs a verified cocycle");
  const Measuring& m = c.m;
  const BasedSpace& as = m.a.alg.space;
  const BasedSpace& hs = m.h.space();
  const LinearMap& mu = m.a.alg.mul;
  LinearMap cn = c_nu(m);
  Report r("crossed product " + as.name() + " # " + hs.name());
  r.equal("c^nu compatible with multiplication", compose(cn, tensor_op(hs, mu)),
          compose(tensor_op(mu, hs), tensor_op(as, cn), tensor_op(cn, as)));
  DAlgebra d = crossed_algebra(m, c.sigma);
  LinearMap shat = sigma_hat(m, c.sigma);
  r.equal("sigma-hat passes through mu_sigma", compose(d.alg.mul, tensor_op(shat, as, hs)),
          compose(d.alg.mul, tensor_op(cn, shat), tensor_op(hs, cn, hs)));
  r.equal("sigma recovered from mu_sigma", recover_sigma(m, c.sigma), c.sigma);
  ComoduleAlgebra ca{m.h, d, tensor_map(as, m.h.hopf.comul())};
  r.merge(check_comodule_algebra(ca));
  if (const Check* f = r.first_failure())
    fail(ErrorKind::TheoremViolation, "crossed product of a verified cocycle: " + f->name + " " + f->witness);
  return {c, ca, r};
}

}  // namespace hopfcleft
