#pragma once

/**
 * @file lifting.hpp
 * @brief Bosonization 𝓗 = R#K of a graded Hopf algebra R in YD over K, scalar cocycles
 * on 𝓗, the maps Φ and Ψ, cocycle deformation and the associated-graded comparison.
 *
 * 𝓗 is treated as a Hopf algebra over the trivial ambient, so the braided machinery of
 * the other modules applies to it unchanged.
 */

#include <map>
#include <string>
#include <vector>

#include "hopfcleft/cleft.hpp"

namespace hopfcleft {

/// Degrees of basis vectors per atom name; atoms without an entry sit in degree 0.
struct Grading {
  std::map<std::string, std::vector<int>> by_atom;

  int degree(const BasedSpace& s, std::size_t idx) const {
    auto mi = s.multi_index(idx);
    int d = 0;
    for (std::size_t k = 0; k < mi.size(); ++k) {
      auto it = by_atom.find(s.atoms()[k]->name);
      if (it != by_atom.end()) d += it->second.at(mi[k]);
    }
    return d;
  }

  int max_degree(const BasedSpace& s) const {
    int m = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) m = std::max(m, degree(s, i));
    return m;
  }
};

/// Every nonzero entry of f connects basis vectors of equal total degree.
inline Report check_graded_map(const LinearMap& f, const Grading& g, const std::string& name) {
  Report r;
  for (std::size_t c = 0; c < f.source().dim(); ++c)
    for (const auto& [row, v] : f.column(c))
      if (g.degree(f.target(), row) != g.degree(f.source(), c)) {
        r.add(name + " preserves degree", false,
              "at " + f.source().label(c) + ": component " + f.target().label(row));
        return r;
      }
  r.add(name + " preserves degree", true);
  return r;
}

struct GradedYDHopf {
  YDHopf r;
  Grading grading;
};

inline Report check_graded_yd_hopf(const GradedYDHopf& g) {
  Report rep("graded Hopf algebra in YD " + g.r.space().name());
  rep.merge(check_yd_hopf(g.r));
  const BasedSpace& rs = g.r.space();
  std::size_t deg0 = 0;
  for (std::size_t i = 0; i < rs.dim(); ++i)
    if (g.grading.degree(rs, i) == 0) ++deg0;
  LinearMap u = g.r.hopf.unit();
  bool unit_deg0 = u.column(0).size() == 1 && g.grading.degree(rs, u.column(0)[0].first) == 0;
  rep.add("connected", deg0 == 1 && unit_deg0, "degree 0 has dimension " + std::to_string(deg0));
  rep.merge(check_graded_map(g.r.hopf.mul(), g.grading, "multiplication"));
  rep.merge(check_graded_map(g.r.hopf.comul(), g.grading, "comultiplication"));
  rep.merge(check_graded_map(g.r.obj.module.action, g.grading, "action"));
  rep.merge(check_graded_map(g.r.obj.coaction, g.grading, "coaction"));
  rep.fact("cosemisimplicity of the ambient", "assumed, not checked");
  return rep;
}

/// (e⊗h)(e'⊗h') = e(h₁·e') ⊗ h₂h' on E⊗K for a K-module algebra E.
inline LinearMap smash_mul(const AlgebraData& e, const LinearMap& action, const HopfAlgebraData& k) {
  const BasedSpace& es = e.space;
  const BasedSpace& ks = k.space();
  return compose(tensor_op(e.mul, ks), tensor_op(es, action, k.mul()), permutation({es, ks, ks, es, ks}, {0, 1, 3, 2, 4}),
                 tensor_op(es, k.comul(), es, ks));
}

struct Bosonization {
  GradedYDHopf r;
  HopfAlgebraData hopf;  // on R⊗K
  YDHopf classical;      // the same over the trivial ambient
  Grading grading;       // 𝓗_(k) = R_(k)⊗K
  Report report;

  const BasedSpace& space() const { return hopf.space(); }
  const HopfAlgebraData& ambient() const { return *r.r.base(); }
  /// r ↦ r⊗1.
  LinearMap j_r() const { return tensor_map(r.r.space(), ambient().unit()); }
  /// h ↦ 1⊗h.
  LinearMap j_k() const { return tensor_map(r.r.hopf.unit(), ambient().space()); }
};

inline Bosonization bosonize(const GradedYDHopf& g) {
  const YDHopf& rr = g.r;
  const HopfAlgebraData& k = *rr.base();
  const BasedSpace& rs = rr.space();
  const BasedSpace& ks = k.space();
  LinearMap mul = smash_mul(rr.hopf.algebra(), rr.obj.module.action, k);
  LinearMap comul = compose(tensor_op(rs, k.mul(), rs, ks), permutation({rs, ks, rs, ks, ks}, {0, 1, 3, 2, 4}),
                            tensor_op(rs, rr.obj.coaction, ks, ks), tensor_op(rr.hopf.comul(), k.comul()));
  BasedSpace hs = tensor(rs, ks);
  HopfAlgebraData h = classical_hopf(hs, mul, tensor_map(rr.hopf.unit(), k.unit()), comul,
                                     tensor_map(rr.hopf.counit(), k.counit()));
  Report rep("bosonization " + hs.name());
  rep.merge(check_graded_yd_hopf(g), "R");
  rep.merge(check_hopf(h));
  LinearMap left = tensor_map(compose(rr.hopf.unit(), rr.hopf.counit()), k.antipode);
  LinearMap right = tensor_map(rr.hopf.antipode, compose(k.unit(), k.counit()));
  rep.equal("antipode formula", convolution(left, right, h.coalgebra(), h.algebra()), h.antipode);
  rep.merge(check_graded_map(h.mul(), g.grading, "bosonization multiplication"));
  rep.merge(check_graded_map(h.comul(), g.grading, "bosonization comultiplication"));
  if (const Check* f = rep.first_failure()) fail(ErrorKind::AxiomFailure, "bosonization: " + f->name + " " + f->witness);
  return {g, h, classical(h), g.grading, rep};
}

/// Scalar-valued two-cocycle candidate on 𝓗 with its membership flags.
struct ScalarCocycleH {
  LinearMap sigma;
  LinearMap sigma_inv;
  bool in_Z = false;
  bool in_Zprime = false;
  Report report;
};

/// (r⊗h, r'⊗h') ↦ (r, h·r') ε(h'): the reduction 𝓗⊗𝓗 → R⊗R.
inline LinearMap reduce_to_r(const Bosonization& b) {
  const BasedSpace& rs = b.r.r.space();
  return compose(tensor_op(rs, b.r.r.obj.module.action, b.ambient().counit()));
}

/// Restriction to (R⊗1)⊗(R⊗1), then the reduction back: f ↦ f(j⊗j)(reduce).
inline LinearMap restriction_normal_form(const Bosonization& b, const LinearMap& f) {
  LinearMap j = b.j_r();
  return compose(f, tensor_op(j, j), reduce_to_r(b));
}

inline Measuring scalar_measuring(const Bosonization& b) { return unit_measuring(b.classical); }

/// Classical two-cocycle identity σ(x₁,y₁)σ(x₂y₂,z) = σ(y₁,z₁)σ(x,y₂z₂).
inline Report check_classical_cocycle_identity(const HopfAlgebraData& h, const LinearMap& sigma) {
  const BasedSpace& s = h.space();
  const LinearMap& d = h.comul();
  LinearMap lhs = compose(tensor_op(sigma, compose(sigma, tensor_op(h.mul(), s))),
                          permutation({s, s, s, s, s}, {0, 2, 1, 3, 4}), tensor_op(d, d, s));
  LinearMap rhs = compose(tensor_op(sigma, compose(sigma, tensor_op(s, h.mul()))),
                          permutation({s, s, s, s, s}, {1, 3, 0, 2, 4}), tensor_op(s, d, d));
  Report r;
  r.equal("classical cocycle identity", lhs, rhs);
  return r;
}

inline ScalarCocycleH check_Zprime(const Bosonization& b, const LinearMap& sigma) {
  ScalarCocycleH out{sigma, LinearMap(sigma.source(), sigma.target()), false, false, Report("scalar cocycle on 𝓗")};
  Report& r = out.report;
  Measuring m = scalar_measuring(b);
  LinearMap inv(sigma.source(), sigma.target());
  Report z = check_cocycle(m, sigma, &inv);
  r.merge(z);
  r.merge(check_classical_cocycle_identity(b.hopf, sigma));
  out.in_Z = r.ok();
  const bool invertible = z.passed("sigma convolution invertible");
  if (invertible) out.sigma_inv = inv;
  const BasedSpace& rs = b.r.r.space();
  const BasedSpace& ks = b.ambient().space();
  const BasedSpace& hs = b.space();
  const HopfAlgebraData& k = b.ambient();
  const LinearMap& er = b.r.r.hopf.counit();
  const LinearMap& ur = b.r.r.hopf.unit();
  Report p;
  p.equal("restriction relation", sigma, restriction_normal_form(b, sigma));
  p.equal("derived: right K-factor acts by counit", sigma,
          compose(sigma, tensor_op(hs, rs, compose(k.unit(), k.counit()))));
  p.equal("derived: unit in the right R-factor", compose(sigma, tensor_op(hs, ur, ks)),
          tensor_map(er, k.counit(), k.counit()));
  p.equal("derived: unit in the left R-factor", compose(sigma, tensor_op(ur, ks, hs)),
          tensor_map(k.counit(), er, k.counit()));
  if (invertible) p.equal("derived: inverse restriction relation", inv, restriction_normal_form(b, inv));
  r.merge(p);
  out.in_Zprime = out.in_Z && p.ok();
  return out;
}

/// Φ(π)(r⊗h, r'⊗h') = π(r, h·r')ε(h'), checked to land in Z'(𝓗); the inverse is
/// taken from the same formula applied to π^{-1} and compared with the solver.
inline ScalarCocycleH phi(const Bosonization& b, const Cocycle& pi) {
  LinearMap red = reduce_to_r(b);
  LinearMap sigma = compose(pi.sigma, red);
  LinearMap closed_inv = compose(pi.sigma_inv, red);
  ScalarCocycleH s = check_Zprime(b, sigma);
  s.report.equal("inverse by formula", closed_inv, s.sigma_inv);
  if (!s.in_Zprime || !s.report.ok()) {
    const Check* f = s.report.first_failure();
    fail(ErrorKind::TheoremViolation, "phi of a cocycle is not in Z': " + (f ? f->name + " " + f->witness : ""));
  }
  return s;
}

/// π(r, r') = σ(r⊗1, r'⊗1), verified as a cocycle in K-mod with Φ(π) = σ.
inline Cocycle phi_inverse(const Bosonization& b, const ScalarCocycleH& s) {
  if (!s.in_Zprime) fail(ErrorKind::ValidationError, "phi inverse needs a cocycle satisfying the restriction relation");
  LinearMap j = b.j_r();
  LinearMap pi = compose(s.sigma, tensor_op(j, j));
  Cocycle c = [&] {
    try {
      return make_cocycle(unit_measuring(b.r.r), pi);
    } catch (const Error& e) {
      fail(ErrorKind::TheoremViolation, std::string("restriction of a Z' cocycle fails: ") + e.what());
    }
  }();
  if (c.sigma_inv != compose(s.sigma_inv, tensor_op(j, j)))
    fail(ErrorKind::TheoremViolation, "restricted inverse differs from the inverse of the restriction");
  if (compose(c.sigma, reduce_to_r(b)) != s.sigma) fail(ErrorKind::TheoremViolation, "phi(phi^-1(sigma)) != sigma");
  return c;
}

/// Ψ: a cleft object 𝓔 over R in K-mod with K-linear section γ gives 𝓔#K over 𝓗 with
/// section γ⊗id and inverse (η_𝓔ε_R⊗S_K) ∗ (γ^{-1}⊗η_Kε_K).
inline CleftExtension psi(const Bosonization& b, const CleftExtension& e) {
  const HopfAlgebraData& k = b.ambient();
  const BasedSpace& ks = k.space();
  const BasedSpace& es = e.alg().space;
  const BasedSpace& rs = b.r.r.space();
  LinearMap mul = smash_mul(e.alg(), e.b.b.obj.action, k);
  BasedSpace eks = tensor(es, ks);
  LinearMap co = compose(tensor_op(es, k.mul(), rs, ks), permutation({es, ks, rs, ks, ks}, {0, 1, 3, 2, 4}),
                         tensor_op(es, b.r.r.obj.coaction, ks, ks), tensor_op(e.b.coaction, k.comul()));
  const YDHopf& hc = b.classical;
  DAlgebra d{{eks, mul, tensor_map(e.alg().unit, k.unit())}, {hc.base(), eks, LinearMap::identity(eks)}};
  ComoduleAlgebra ca{hc, d, co};
  LinearMap gamma = tensor_map(e.section, ks);
  LinearMap left = tensor_map(compose(e.alg().unit, b.r.r.hopf.counit()), k.antipode);
  LinearMap right = tensor_map(e.section_inv, compose(k.unit(), k.counit()));
  LinearMap inv = convolution(left, right, hc.hopf.coalgebra(), d.alg);
  CleftExtension out{ca, gamma, inv, true};
  Report r = check_cleft(out);
  if (const Check* f = r.first_failure()) fail(ErrorKind::TheoremViolation, "psi: " + f->name + " " + f->witness);
  if (!is_cleft_object(out)) fail(ErrorKind::TheoremViolation, "psi: coinvariants are not one-dimensional");
  return out;
}

/// The section relation γ((1⊗h)(r⊗h')(1⊗h'')) = γ(1⊗h)γ(r⊗h')γ(1⊗h'') and, when it
/// holds, its three consequences.
inline Report check_Cprime_section(const Bosonization& b, const CleftExtension& e) {
  Report r("section relation");
  const HopfAlgebraData& h = b.hopf;
  const HopfAlgebraData& k = b.ambient();
  const BasedSpace& ks = k.space();
  const BasedSpace& rs = b.r.r.space();
  const BasedSpace& hs = b.space();
  const AlgebraData& ea = e.alg();
  LinearMap jk = b.j_k();
  LinearMap mu2 = iterated_mul(h.algebra(), 2);
  LinearMap emu2 = iterated_mul(ea, 2);
  LinearMap gk = compose(e.section, jk);
  LinearMap gik = compose(e.section_inv, jk);
  r.equal("section relation", compose(e.section, mu2, tensor_op(jk, hs, jk)),
          compose(emu2, tensor_op(gk, e.section, gk)));
  if (!r.ok()) return r;
  r.equal("derived: section splits off K", compose(e.section, tensor_op(rs, k.mul())),
          compose(ea.mul, tensor_op(e.section, gk)));
  r.equal("derived: section on antipode", compose(gk, k.antipode), gik);
  r.equal("derived: inverse reverses products", compose(e.section_inv, mu2, tensor_op(jk, hs, jk)),
          compose(emu2, tensor_op(gik, e.section_inv, gik), permutation({ks, hs, ks}, {2, 1, 0})));
  return r;
}

/// A map into a one-dimensional algebra rewritten as a scalar map via its unit.
inline LinearMap scalarize(const LinearMap& f, const AlgebraData& one_dim) {
  if (one_dim.space.dim() != 1) fail(ErrorKind::ValidationError, "coinvariants are not one-dimensional");
  return compose(inverse(one_dim.unit), f);
}

/// σ_γ of a cleft object over 𝓗 whose section satisfies the section relation; the result
/// must satisfy the restriction relation.
inline ScalarCocycleH sigma_gamma_restricts(const Bosonization& b, const CleftExtension& e) {
  SectionCocycle sc = cocycle_from_section(e);
  LinearMap s = scalarize(sc.cocycle.sigma, sc.cocycle.m.a.alg);
  ScalarCocycleH out = check_Zprime(b, s);
  if (!out.in_Zprime) {
    const Check* f = out.report.first_failure();
    fail(ErrorKind::TheoremViolation, "sigma_gamma leaves Z': " + (f ? f->name + " " + f->witness : ""));
  }
  return out;
}

/// μ_σ(x,y) = σ(x₁,y₁) x₂y₂ σ^{-1}(x₃,y₃) with the coalgebra of 𝓗; antipode recomputed.
inline HopfAlgebraData deform(const HopfAlgebraData& h, const LinearMap& sigma, const LinearMap& sigma_inv) {
  const BasedSpace& s = h.space();
  LinearMap d2 = iterated_comul(h.coalgebra(), 2);
  LinearMap mul = compose(tensor_op(sigma, h.mul(), sigma_inv), permutation({s, s, s, s, s, s}, {0, 3, 1, 4, 2, 5}),
                          tensor_op(d2, d2));
  return classical_hopf(s, mul, h.unit(), h.comul(), h.counit());
}

inline HopfAlgebraData deform(const Bosonization& b, const ScalarCocycleH& s) {
  if (!s.in_Z) fail(ErrorKind::ValidationError, "deformation needs a two-cocycle");
  HopfAlgebraData d = deform(b.hopf, s.sigma, s.sigma_inv);
  Report r = check_hopf(d);
  if (const Check* f = r.first_failure()) fail(ErrorKind::AxiomFailure, "deformed Hopf algebra: " + f->name);
  return d;
}

/// For homogeneous x ∈ 𝓗_(k), y ∈ 𝓗_(l): μ_σ(x,y) has no component above k+l and its
/// degree k+l component is μ(x,y). Lower-degree corrections are counted and recorded.
inline Report gr_check(const Bosonization& b, const HopfAlgebraData& deformed) {
  Report r("associated graded comparison");
  const BasedSpace& s = b.space();
  const Grading& g = b.grading;
  const int top = g.max_degree(s);
  const std::size_t d = s.dim();
  std::size_t corrections = 0;
  std::string example;
  for (int k = 0; k <= top; ++k)
    for (int l = 0; l <= top; ++l) {
      std::string above, top_witness;
      for (std::size_t i = 0; i < d; ++i) {
        if (g.degree(s, i) != k) continue;
        for (std::size_t j = 0; j < d; ++j) {
          if (g.degree(s, j) != l) continue;
          const auto& col = deformed.mul().column(i * d + j);
          LinearMap::Column topc, lower;
          for (const auto& e : col) {
            int de = g.degree(s, e.first);
            if (de > k + l && above.empty()) above = s.label(i) + " · " + s.label(j) + " has " + s.label(e.first);
            if (de == k + l) topc.push_back(e);
            if (de < k + l) lower.push_back(e);
          }
          if (topc != b.hopf.mul().column(i * d + j) && top_witness.empty())
            top_witness = s.label(i) + " · " + s.label(j) + ": " + LinearMap::describe_vector(s, topc) +
                          " ≠ " + b.hopf.mul().describe_column(i * d + j);
          if (!lower.empty()) {
            ++corrections;
            if (example.empty())
              example = s.label(i) + " · " + s.label(j) + " = " + LinearMap::describe_vector(s, topc) +
                        " + [" + LinearMap::describe_vector(s, lower) + "]";
          }
        }
      }
      const std::string tag = "degrees " + std::to_string(k) + "+" + std::to_string(l);
      r.add(tag + ": nothing above", above.empty(), above);
      r.add(tag + ": top component undeformed", top_witness.empty(), top_witness);
    }
  r.fact("products with lower-degree corrections", std::to_string(corrections));
  if (!example.empty()) r.fact("first correction", example);
  return r;
}

}  // namespace hopfcleft
