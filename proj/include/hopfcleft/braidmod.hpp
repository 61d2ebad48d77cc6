#pragma once

/**
 * @file braidmod.hpp
 * @brief Modules over an ambient Hopf algebra K, Yetter–Drinfeld modules, the left
 * braiding c_{X,V}(x⊗v) = x₋₁·v ⊗ x₀, and the structures built from it.
 *
 * The ambient K is a classical Hopf algebra. With the trivial ambient (K = 𝕜 on 𝟙)
 * actions and coactions are identities, the braiding is the flip, and every
 * construction here reduces to the classical one.
 */

#include <memory>
#include <string>

#include "hopfcleft/hopfcore.hpp"

namespace hopfcleft {

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

inline HopfPtr trivial_ambient(Field f) { return std::make_shared<const HopfAlgebraData>(HopfAlgebraData::trivial(f)); }

inline HopfPtr share(HopfAlgebraData h) { return std::make_shared<const HopfAlgebraData>(std::move(h)); }

/// Left K-module: an object of 𝒟.
struct HModule {
  HopfPtr base;
  BasedSpace space;
  LinearMap action;  // K⊗V → V
};

/// Left-left Yetter–Drinfeld module over K: an object of 𝒞.
struct YDModule {
  HModule module;
  LinearMap coaction;  // V → K⊗V

  const BasedSpace& space() const { return module.space; }
  const HopfPtr& base() const { return module.base; }
};

/// V with K acting through the counit.
inline HModule trivial_module(const HopfPtr& base, const BasedSpace& v) {
  return {base, v, tensor_map(base->counit(), v)};
}

/// V with trivial action and coaction x ↦ 1⊗x.
inline YDModule trivial_yd(const HopfPtr& base, const BasedSpace& v) {
  return {trivial_module(base, v), tensor_map(base->unit(), v)};
}

inline void same_base(const HopfPtr& a, const HopfPtr& b) {
  if (a.get() == b.get()) return;
  if (a->space() == b->space() && a->mul() == b->mul() && a->comul() == b->comul()) return;
  fail(ErrorKind::BaseMismatch, "objects live over different ambient Hopf algebras");
}

/// Diagonal action on V⊗W: (act⊗act)(id⊗flip_{K,V}⊗id)(Δ_K⊗id⊗id).
inline HModule tensor_modules(const HModule& v, const HModule& w) {
  same_base(v.base, w.base);
  const BasedSpace& k = v.base->space();
  LinearMap act = compose(tensor_op(v.action, w.action), permutation({k, k, v.space, w.space}, {0, 2, 1, 3}),
                          tensor_op(v.base->comul(), v.space, w.space));
  return {v.base, tensor(v.space, w.space), act};
}

inline YDModule tensor_yd(const YDModule& x, const YDModule& y) {
  HModule m = tensor_modules(x.module, y.module);
  const BasedSpace& k = x.base()->space();
  LinearMap co = compose(tensor_op(x.base()->mul(), x.space(), y.space()),
                         permutation({k, x.space(), k, y.space()}, {0, 2, 1, 3}), tensor_op(x.coaction, y.coaction));
  return {m, co};
}

inline HModule unit_module(const HopfPtr& base) { return trivial_module(base, BasedSpace::unit(base->field())); }
inline YDModule unit_yd(const HopfPtr& base) { return trivial_yd(base, BasedSpace::unit(base->field())); }

inline Report check_module(const HModule& m) {
  Report r("module " + m.space.name());
  const HopfAlgebraData& k = *m.base;
  r.equal("action associative", compose(m.action, tensor_op(k.mul(), m.space)),
          compose(m.action, tensor_op(k.space(), m.action)));
  r.equal("action unital", compose(m.action, tensor_op(k.unit(), m.space)), LinearMap::identity(m.space));
  return r;
}

inline Report check_left_comodule(const HopfPtr& base, const BasedSpace& v, const LinearMap& coaction) {
  Report r("comodule " + v.name());
  const HopfAlgebraData& k = *base;
  r.equal("coaction coassociative", compose(tensor_op(k.comul(), v), coaction),
          compose(tensor_op(k.space(), coaction), coaction));
  r.equal("coaction counital", compose(tensor_op(k.counit(), v), coaction), LinearMap::identity(v));
  return r;
}

/// Module and comodule axioms plus δ(h·x) = h₁x₋₁S(h₃) ⊗ h₂·x₀.
inline Report check_yd(const YDModule& x) {
  Report r("Yetter-Drinfeld module " + x.space().name());
  r.merge(check_module(x.module));
  r.merge(check_left_comodule(x.base(), x.space(), x.coaction));
  const HopfAlgebraData& k = *x.base();
  const BasedSpace& ks = k.space();
  CoalgebraData kc = k.coalgebra();
  LinearMap delta2 = iterated_comul(kc, 2);
  LinearMap conj = compose(k.mul(), tensor_op(k.mul(), ks), tensor_op(ks, ks, k.antipode));
  LinearMap rhs = compose(tensor_op(conj, x.module.action), permutation({ks, ks, ks, ks, x.space()}, {0, 3, 2, 1, 4}),
                          tensor_op(delta2, x.coaction));
  r.equal("Yetter-Drinfeld compatibility", compose(x.coaction, x.module.action), rhs);
  return r;
}

/// f ∘ act_V = act_W ∘ (id_K ⊗ f).
inline Report check_module_morphism(const LinearMap& f, const HModule& v, const HModule& w) {
  Report r("module morphism " + f.signature());
  r.equal("K-linear", compose(f, v.action), compose(w.action, tensor_op(v.base->space(), f)));
  return r;
}

inline Report check_yd_morphism(const LinearMap& f, const YDModule& x, const YDModule& y) {
  Report r = check_module_morphism(f, x.module, y.module);
  r.equal("K-colinear", compose(y.coaction, f), compose(tensor_op(x.base()->space(), f), x.coaction));
  return r;
}

/// c_{X,V} = (act_V ⊗ id)(id_K ⊗ flip_{X,V})(δ_X ⊗ id_V): X⊗V → V⊗X.
inline LinearMap braiding(const YDModule& x, const HModule& v) {
  same_base(x.base(), v.base);
  const BasedSpace& k = x.base()->space();
  return compose(tensor_op(v.action, x.space()), permutation({k, x.space(), v.space}, {0, 2, 1}),
                 tensor_op(x.coaction, v.space));
}

inline LinearMap braiding_inverse(const YDModule& x, const HModule& v) {
  try {
    return inverse(braiding(x, v));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInvertible)
      fail(ErrorKind::CorruptFixture, "braiding of " + x.space().name() + " and " + v.space.name() + " is singular");
    throw;
  }
}

inline HModule forget(const YDModule& x) { return x.module; }

/// Left-braiding axioms for YD modules x, y, modules v, w, a YD morphism f: x → y and
/// a module morphism g: v → w.
inline Report check_braiding_axioms(const YDModule& x, const YDModule& y, const HModule& v, const HModule& w,
                                    const LinearMap& f, const LinearMap& g) {
  Report r("left braiding");
  r.merge(check_yd_morphism(f, x, y), "f");
  r.merge(check_module_morphism(g, v, w), "g");
  LinearMap cxv = braiding(x, v);
  r.equal("naturality", compose(braiding(y, w), tensor_op(f, g)), compose(tensor_op(g, f), cxv));
  r.equal("multiplicative in the YD argument", braiding(tensor_yd(x, y), v),
          compose(tensor_op(cxv, y.space()), tensor_op(x.space(), braiding(y, v))));
  r.equal("multiplicative in the module argument", braiding(x, tensor_modules(v, w)),
          compose(tensor_op(v.space, braiding(x, w)), tensor_op(cxv, w.space)));
  HModule xv = tensor_modules(forget(x), v), vx = tensor_modules(v, forget(x));
  r.merge(check_module_morphism(cxv, xv, vx), "braiding is a module morphism");
  bool invertible = true;
  try {
    LinearMap inv = inverse(cxv);
    invertible = compose(inv, cxv) == LinearMap::identity(cxv.source());
  } catch (const Error&) {
    invertible = false;
  }
  r.add("braiding invertible", invertible);
  r.equal("unit on the left", braiding(unit_yd(x.base()), v), LinearMap::identity(v.space));
  r.equal("unit on the right", braiding(x, unit_module(x.base())), LinearMap::identity(x.space()));
  return r;
}

// ---------------------------------------------------------------------------
// (Co)algebras living in 𝒟 and in 𝒞.

/// An algebra in 𝒟: structure maps should be K-linear.
struct DAlgebra {
  AlgebraData alg;
  HModule obj;
};

struct DCoalgebra {
  CoalgebraData coalg;
  HModule obj;
};

struct YDAlgebra {
  AlgebraData alg;
  YDModule obj;
};

struct YDCoalgebra {
  CoalgebraData coalg;
  YDModule obj;
};

/// A Hopf algebra in 𝒞: YD module with Hopf structure whose bialgebra braiding is c_{H,H}.
struct YDHopf {
  HopfAlgebraData hopf;
  YDModule obj;

  const BasedSpace& space() const { return hopf.space(); }
  const Field& field() const { return hopf.field(); }
  const HopfPtr& base() const { return obj.base(); }
  YDAlgebra algebra() const { return {hopf.algebra(), obj}; }
  YDCoalgebra coalgebra() const { return {hopf.coalgebra(), obj}; }
  DAlgebra d_algebra() const { return {hopf.algebra(), obj.module}; }
  DCoalgebra d_coalgebra() const { return {hopf.coalgebra(), obj.module}; }
};

/// Assembles a Hopf algebra in 𝒞 from its YD module and structure maps; the antipode is
/// the convolution inverse of the identity (NotHopf otherwise).
inline YDHopf make_yd_hopf(const YDModule& obj, const LinearMap& mul, const LinearMap& unit, const LinearMap& comul,
                           const LinearMap& counit) {
  BialgebraData b{{obj.space(), mul, unit}, {obj.space(), comul, counit}, braiding(obj, obj.module)};
  return {make_hopf(b), obj};
}

/// A classical Hopf algebra viewed over the trivial ambient.
inline YDHopf classical(const HopfAlgebraData& h) {
  HopfPtr k = trivial_ambient(h.field());
  YDModule obj{{k, h.space(), LinearMap::identity(h.space())}, LinearMap::identity(h.space())};
  return {h, obj};
}

/// Classical bialgebra data with flip braiding, antipode computed.
inline HopfAlgebraData classical_hopf(const BasedSpace& h, const LinearMap& mul, const LinearMap& unit,
                                     const LinearMap& comul, const LinearMap& counit) {
  BialgebraData b{{h, mul, unit}, {h, comul, counit}, flip(h, h)};
  return make_hopf(b);
}

inline Report check_d_algebra(const DAlgebra& a) {
  Report r = check_algebra(a.alg);
  r.merge(check_module(a.obj));
  HModule aa = tensor_modules(a.obj, a.obj);
  r.merge(check_module_morphism(a.alg.mul, aa, a.obj), "multiplication");
  r.merge(check_module_morphism(a.alg.unit, unit_module(a.obj.base), a.obj), "unit");
  return r;
}

inline Report check_yd_hopf(const YDHopf& h) {
  Report r("Hopf algebra in YD " + h.space().name());
  r.merge(check_hopf(h.hopf));
  r.merge(check_yd(h.obj));
  r.equal("bialgebra braiding is c_{H,H}", h.hopf.braiding(), braiding(h.obj, h.obj.module));
  YDModule hh = tensor_yd(h.obj, h.obj), one = unit_yd(h.base());
  r.merge(check_yd_morphism(h.hopf.mul(), hh, h.obj), "multiplication");
  r.merge(check_yd_morphism(h.hopf.unit(), one, h.obj), "unit");
  r.merge(check_yd_morphism(h.hopf.comul(), h.obj, hh), "comultiplication");
  r.merge(check_yd_morphism(h.hopf.counit(), h.obj, one), "counit");
  r.merge(check_yd_morphism(h.hopf.antipode, h.obj, h.obj), "antipode");
  return r;
}

/// A ⊗ B̄ with multiplication (μ_A⊗μ_B)(id⊗c_{B,A}⊗id) and unit η_A⊗η_B.
inline DAlgebra braided_tensor_algebra(const DAlgebra& a, const YDAlgebra& b) {
  const BasedSpace& as = a.alg.space;
  const BasedSpace& bs = b.alg.space;
  LinearMap mul = compose(tensor_op(a.alg.mul, b.alg.mul), tensor_op(as, braiding(b.obj, a.obj), bs));
  return {{tensor(as, bs), mul, tensor_map(a.alg.unit, b.alg.unit)}, tensor_modules(a.obj, b.obj.module)};
}

/// B̄ ⊗ A with comultiplication (id⊗c_{B,A}⊗id)(Δ_B⊗Δ_A) and counit ε_B⊗ε_A.
inline DCoalgebra braided_tensor_coalgebra(const YDCoalgebra& b, const DCoalgebra& a) {
  const BasedSpace& as = a.coalg.space;
  const BasedSpace& bs = b.coalg.space;
  LinearMap comul = compose(tensor_op(bs, braiding(b.obj, a.obj), as), tensor_op(b.coalg.comul, a.coalg.comul));
  return {{tensor(bs, as), comul, tensor_map(b.coalg.counit, a.coalg.counit)}, tensor_modules(b.obj.module, a.obj)};
}

/// The same coalgebra on B̄⊗C̄ for two YD coalgebras, kept as an object of 𝒞.
inline YDCoalgebra braided_tensor_coalgebra(const YDCoalgebra& b, const YDCoalgebra& c) {
  DCoalgebra d = braided_tensor_coalgebra(b, DCoalgebra{c.coalg, c.obj.module});
  return {d.coalg, tensor_yd(b.obj, c.obj)};
}

/// H̄^{⊗n} with its braided coalgebra structure (n ≥ 1).
inline YDCoalgebra coalgebra_power(const YDHopf& h, std::size_t n) {
  YDCoalgebra c = h.coalgebra();
  for (std::size_t k = 1; k < n; ++k) c = braided_tensor_coalgebra(c, h.coalgebra());
  return c;
}

/// Left H̄-module in 𝒟.
struct HbarModule {
  HModule obj;
  LinearMap action;  // H̄⊗M → M
};

/// Right H̄-comodule in 𝒟.
struct HbarComodule {
  HModule obj;
  LinearMap coaction;  // M → M⊗H̄
};

inline HbarModule module_tensor(const HbarModule& m, const HbarModule& n, const YDHopf& h) {
  const BasedSpace& hs = h.space();
  LinearMap act = compose(tensor_op(m.action, n.action), tensor_op(hs, braiding(h.obj, m.obj), n.obj.space),
                          tensor_op(h.hopf.comul(), m.obj.space, n.obj.space));
  return {tensor_modules(m.obj, n.obj), act};
}

inline HbarComodule comodule_tensor(const HbarComodule& m, const HbarComodule& n, const YDHopf& h) {
  const BasedSpace& hs = h.space();
  LinearMap co = compose(tensor_op(m.obj.space, n.obj.space, h.hopf.mul()),
                         tensor_op(m.obj.space, braiding(h.obj, n.obj), hs), tensor_op(m.coaction, n.coaction));
  return {tensor_modules(m.obj, n.obj), co};
}

inline Report check_hbar_module(const HbarModule& m, const YDHopf& h) {
  Report r("H-module " + m.obj.space.name());
  const BasedSpace& s = m.obj.space;
  r.equal("action associative", compose(m.action, tensor_op(h.hopf.mul(), s)),
          compose(m.action, tensor_op(h.space(), m.action)));
  r.equal("action unital", compose(m.action, tensor_op(h.hopf.unit(), s)), LinearMap::identity(s));
  return r;
}

inline Report check_hbar_comodule(const HbarComodule& m, const YDHopf& h) {
  Report r("H-comodule " + m.obj.space.name());
  const BasedSpace& s = m.obj.space;
  r.equal("coaction coassociative", compose(tensor_op(m.coaction, h.space()), m.coaction),
          compose(tensor_op(s, h.hopf.comul()), m.coaction));
  r.equal("coaction counital", compose(tensor_op(s, h.hopf.counit()), m.coaction), LinearMap::identity(s));
  return r;
}

// ---------------------------------------------------------------------------
// Measurings.

struct Measuring {
  YDHopf h;
  DAlgebra a;
  LinearMap nu;  // H̄⊗A → A
};

/// ν = ε̄ on 𝟙.
inline Measuring unit_measuring(const YDHopf& h) {
  return {h, {AlgebraData::trivial(h.field()), unit_module(h.base())}, h.hopf.counit()};
}

/// c^ν = (ν⊗id)(id⊗c_{H,A})(Δ̄⊗id): H̄⊗A → A⊗H̄.
inline LinearMap c_nu(const Measuring& m) {
  const BasedSpace& hs = m.h.space();
  const BasedSpace& as = m.a.alg.space;
  return compose(tensor_op(m.nu, hs), tensor_op(hs, braiding(m.h.obj, m.a.obj)), tensor_op(m.h.hopf.comul(), as));
}

inline Report check_measuring(const Measuring& m) {
  Report r("measuring " + m.a.alg.space.name());
  const BasedSpace& hs = m.h.space();
  const BasedSpace& as = m.a.alg.space;
  const LinearMap& mu = m.a.alg.mul;
  const LinearMap& eta = m.a.alg.unit;
  r.merge(check_d_algebra(m.a), "A");
  r.merge(check_module_morphism(m.nu, tensor_modules(m.h.obj.module, m.a.obj), m.a.obj), "measuring map");
  r.equal("unit of H acts trivially", compose(m.nu, tensor_op(m.h.hopf.unit(), as)), LinearMap::identity(as));
  r.equal("measuring preserves unit", compose(m.nu, tensor_op(hs, eta)), compose(eta, m.h.hopf.counit()));
  LinearMap lhs = compose(m.nu, tensor_op(hs, mu));
  r.equal("measuring preserves product",
          lhs, compose(mu, tensor_op(m.nu, m.nu), tensor_op(hs, braiding(m.h.obj, m.a.obj), as),
                       tensor_op(m.h.hopf.comul(), as, as)));
  LinearMap cn = c_nu(m);
  r.equal("measuring preserves product via c^nu", lhs, compose(mu, tensor_op(as, m.nu), tensor_op(cn, as)));
  r.equal("(id⊗ε)c^nu = nu", compose(tensor_op(as, m.h.hopf.counit()), cn), m.nu);
  r.equal("c^nu(id⊗η) = η⊗id", compose(cn, tensor_op(hs, eta)), tensor_map(eta, hs));
  return r;
}

/// ν(μ̄⊗id) = ν(id⊗ν).
inline bool measuring_is_associative(const Measuring& m) {
  return compose(m.nu, tensor_op(m.h.hopf.mul(), m.a.alg.space)) == compose(m.nu, tensor_op(m.h.space(), m.nu));
}

/// f is an algebra morphism with f ν_A = ν_{A'}(id⊗f).
inline Report check_measuring_morphism(const LinearMap& f, const Measuring& a, const Measuring& b) {
  Report r = check_algebra_morphism(f, a.a.alg, b.a.alg);
  r.merge(check_module_morphism(f, a.a.obj, b.a.obj));
  r.equal("commutes with measuring", compose(f, a.nu), compose(b.nu, tensor_op(a.h.space(), f)));
  return r;
}

// ---------------------------------------------------------------------------
// Comodule algebras and coinvariants.

struct ComoduleAlgebra {
  YDHopf h;
  DAlgebra b;
  LinearMap coaction;  // B → B⊗H̄
};

inline Report check_comodule_algebra(const ComoduleAlgebra& c) {
  Report r("comodule algebra " + c.b.alg.space.name());
  r.merge(check_d_algebra(c.b), "B");
  r.merge(check_hbar_comodule({c.b.obj, c.coaction}, c.h));
  r.merge(check_module_morphism(c.coaction, c.b.obj, tensor_modules(c.b.obj, c.h.obj.module)), "coaction");
  DAlgebra bh = braided_tensor_algebra(c.b, c.h.algebra());
  r.merge(check_algebra_morphism(c.coaction, c.b.alg, bh.alg), "coaction");
  return r;
}

struct Coinvariants {
  DAlgebra alg;
  LinearMap iota;
};

/// Equalizer of ρ_B and id⊗η̄ with its induced algebra and K-module structure.
inline Coinvariants coinvariants(const ComoduleAlgebra& c, const std::string& name = "Bco") {
  const BasedSpace& bs = c.b.alg.space;
  Equalizer e = equalizer(c.coaction, tensor_map(bs, c.h.hopf.unit()), name);
  auto induce = [&](const LinearMap& target, const char* what) {
    try {
      return factor_through(e.iota, target);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::FactorizationFailure)
        fail(ErrorKind::InducedStructureFailure, std::string(what) + " does not restrict to coinvariants");
      throw;
    }
  };
  const BasedSpace& es = e.space;
  const BasedSpace& ks = c.b.obj.base->space();
  LinearMap unit = induce(c.b.alg.unit, "unit");
  LinearMap mul = induce(compose(c.b.alg.mul, tensor_op(e.iota, e.iota)), "multiplication");
  LinearMap act = induce(compose(c.b.obj.action, tensor_op(ks, e.iota)), "K-action");
  return {{{es, mul, unit}, {c.b.obj.base, es, act}}, e.iota};
}

}  // namespace hopfcleft
