#pragma once

/**
 * @file hopfcore.hpp
 * @brief Algebras, coalgebras, bialgebras and Hopf algebras given by structure constants.
 *
 * Bialgebras carry the braiding c_{H,H} used to form the product on H⊗H; for a
 * classical Hopf algebra this is the flip. Convolution inverses are found by one
 * exact linear solve followed by a check of the other side.
 */

#include <string>
#include <vector>

#include "hopfcleft/linspace.hpp"
#include "hopfcleft/report.hpp"

namespace hopfcleft {

struct AlgebraData {
  BasedSpace space;
  LinearMap mul;   // space⊗space → space
  LinearMap unit;  // 𝟙 → space

  /// 𝟙 with identity structure maps.
  static AlgebraData trivial(Field f) {
    BasedSpace u = BasedSpace::unit(f);
    return {u, LinearMap::identity(u), LinearMap::identity(u)};
  }
};

struct CoalgebraData {
  BasedSpace space;
  LinearMap comul;   // space → space⊗space
  LinearMap counit;  // space → 𝟙

  static CoalgebraData trivial(Field f) {
    BasedSpace u = BasedSpace::unit(f);
    return {u, LinearMap::identity(u), LinearMap::identity(u)};
  }
};

struct BialgebraData {
  AlgebraData alg;
  CoalgebraData coalg;
  LinearMap braiding;  // c_{H,H}: H⊗H → H⊗H, used for the algebra structure on H⊗H
};

struct HopfAlgebraData {
  BialgebraData bialg;
  LinearMap antipode;

  const BasedSpace& space() const { return bialg.alg.space; }
  const Field& field() const { return space().field(); }
  const LinearMap& mul() const { return bialg.alg.mul; }
  const LinearMap& unit() const { return bialg.alg.unit; }
  const LinearMap& comul() const { return bialg.coalg.comul; }
  const LinearMap& counit() const { return bialg.coalg.counit; }
  const LinearMap& braiding() const { return bialg.braiding; }
  const AlgebraData& algebra() const { return bialg.alg; }
  const CoalgebraData& coalgebra() const { return bialg.coalg; }

  /// The one-dimensional Hopf algebra 𝕜 on 𝟙.
  static HopfAlgebraData trivial(Field f) {
    BasedSpace u = BasedSpace::unit(f);
    LinearMap id = LinearMap::identity(u);
    return {{AlgebraData::trivial(f), CoalgebraData::trivial(f), id}, id};
  }
};

inline void check_shapes(const AlgebraData& a) {
  const BasedSpace aa = tensor(a.space, a.space);
  if (a.mul.source() != aa || a.mul.target() != a.space)
    fail(ErrorKind::ShapeMismatch, "multiplication has shape " + a.mul.signature());
  if (!a.unit.source().is_unit() || a.unit.target() != a.space)
    fail(ErrorKind::ShapeMismatch, "unit has shape " + a.unit.signature());
}

inline void check_shapes(const CoalgebraData& c) {
  const BasedSpace cc = tensor(c.space, c.space);
  if (c.comul.source() != c.space || c.comul.target() != cc)
    fail(ErrorKind::ShapeMismatch, "comultiplication has shape " + c.comul.signature());
  if (c.counit.source() != c.space || !c.counit.target().is_unit())
    fail(ErrorKind::ShapeMismatch, "counit has shape " + c.counit.signature());
}

/// μ^n: A^{⊗(n+1)} → A, nested as μ(μ^{n-1} ⊗ id); μ^0 = id.
inline LinearMap iterated_mul(const AlgebraData& a, std::size_t n) {
  LinearMap m = LinearMap::identity(a.space);
  for (std::size_t k = 1; k <= n; ++k) m = compose(a.mul, tensor_op(m, a.space));
  return m;
}

/// Δ^n: C → C^{⊗(n+1)}, nested as (Δ ⊗ id^{n-1})Δ^{n-1}; Δ^0 = id.
inline LinearMap iterated_comul(const CoalgebraData& c, std::size_t n) {
  LinearMap m = LinearMap::identity(c.space);
  for (std::size_t k = 1; k <= n; ++k) m = compose(tensor_op(c.comul, power(c.space, k - 1)), m);
  return m;
}

inline LinearMap convolution_unit(const CoalgebraData& c, const AlgebraData& a) { return compose(a.unit, c.counit); }

inline LinearMap convolution(const LinearMap& f, const LinearMap& g, const CoalgebraData& c, const AlgebraData& a) {
  if (f.source() != c.space || g.source() != c.space || f.target() != a.space || g.target() != a.space)
    fail(ErrorKind::ShapeMismatch, "convolution of " + f.signature() + " and " + g.signature());
  return compose(a.mul, tensor_op(f, g), c.comul);
}

/// Two-sided convolution inverse of f: C → A, or NotInvertible.
inline LinearMap convolution_inverse(const LinearMap& f, const CoalgebraData& c, const AlgebraData& a) {
  if (f.source() != c.space || f.target() != a.space)
    fail(ErrorKind::ShapeMismatch, "convolution inverse of " + f.signature());
  const std::size_t dc = c.space.dim(), da = a.space.dim(), n = dc * da;
  const Field& fld = f.field();
  // F = μ(f ⊗ id): C⊗A → A, so (f∗g)(k) = Σ Δ_{pq,k} F(p ⊗ g(q)).
  LinearMap big_f = compose(a.mul, tensor_op(f, a.space));
  // Unknown g_{j,q} sits at index j*dc + q; equation (t,k) at t*dc + k.
  DenseMatrix m(n, std::vector<Scalar>(n + 1, Scalar::zero(fld)));
  for (std::size_t k = 0; k < dc; ++k) {
    for (const auto& [pq, dval] : c.comul.column(k)) {
      const std::size_t p = pq / dc, q = pq % dc;
      for (std::size_t j = 0; j < da; ++j)
        for (const auto& [t, fval] : big_f.column(p * da + j)) m[t * dc + k][j * dc + q] += dval * fval;
    }
  }
  LinearMap unit = convolution_unit(c, a);
  for (std::size_t k = 0; k < dc; ++k)
    for (const auto& [t, v] : unit.column(k)) m[t * dc + k][n] = v;
  EchelonForm e = rref(std::move(m), n);
  for (std::size_t row = e.pivots.size(); row < n; ++row)
    if (!e.m[row][n].is_zero()) fail(ErrorKind::NotInvertible, "no right convolution inverse for " + f.signature());
  LinearMap g(c.space, a.space);
  for (std::size_t row = 0; row < e.pivots.size(); ++row) {
    const std::size_t idx = e.pivots[row];
    if (!e.m[row][n].is_zero()) g.set(idx / dc, idx % dc, e.m[row][n]);
  }
  if (convolution(f, g, c, a) != unit || convolution(g, f, c, a) != unit)
    fail(ErrorKind::NotInvertible, "right inverse of " + f.signature() + " is not a left inverse");
  return g;
}

inline bool is_convolution_invertible(const LinearMap& f, const CoalgebraData& c, const AlgebraData& a) {
  try {
    convolution_inverse(f, c, a);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInvertible) return false;
    throw;
  }
}

inline Report check_algebra(const AlgebraData& a) {
  check_shapes(a);
  Report r("algebra " + a.space.name());
  r.equal("associativity", compose(a.mul, tensor_op(a.mul, a.space)), compose(a.mul, tensor_op(a.space, a.mul)));
  r.equal("left unit", compose(a.mul, tensor_op(a.unit, a.space)), LinearMap::identity(a.space));
  r.equal("right unit", compose(a.mul, tensor_op(a.space, a.unit)), LinearMap::identity(a.space));
  return r;
}

inline Report check_coalgebra(const CoalgebraData& c) {
  check_shapes(c);
  Report r("coalgebra " + c.space.name());
  r.equal("coassociativity", compose(tensor_op(c.comul, c.space), c.comul),
          compose(tensor_op(c.space, c.comul), c.comul));
  r.equal("left counit", compose(tensor_op(c.counit, c.space), c.comul), LinearMap::identity(c.space));
  r.equal("right counit", compose(tensor_op(c.space, c.counit), c.comul), LinearMap::identity(c.space));
  return r;
}

/// Multiplication of H⊗H built from the braiding hook: (μ⊗μ)(id⊗c⊗id).
inline LinearMap braided_square_mul(const BialgebraData& b) {
  const BasedSpace& h = b.alg.space;
  return compose(tensor_op(b.alg.mul, b.alg.mul), tensor_op(h, b.braiding, h));
}

inline Report check_bialgebra(const BialgebraData& b) {
  Report r("bialgebra " + b.alg.space.name());
  r.merge(check_algebra(b.alg));
  r.merge(check_coalgebra(b.coalg));
  if (b.alg.space != b.coalg.space) fail(ErrorKind::ShapeMismatch, "algebra and coalgebra spaces differ");
  const BasedSpace& h = b.alg.space;
  if (b.braiding.source() != tensor(h, h) || b.braiding.target() != tensor(h, h))
    fail(ErrorKind::ShapeMismatch, "braiding has shape " + b.braiding.signature());
  r.equal("comultiplication multiplicative", compose(b.coalg.comul, b.alg.mul),
          compose(braided_square_mul(b), tensor_op(b.coalg.comul, b.coalg.comul)));
  r.equal("counit multiplicative", compose(b.coalg.counit, b.alg.mul), tensor_map(b.coalg.counit, b.coalg.counit));
  r.equal("comultiplication unital", compose(b.coalg.comul, b.alg.unit), tensor_map(b.alg.unit, b.alg.unit));
  r.equal("counit unital", compose(b.coalg.counit, b.alg.unit), LinearMap::identity(BasedSpace::unit(h.field())));
  return r;
}

/// id^{-1} in the convolution algebra End(H); NotHopf when it does not exist.
inline LinearMap antipode(const BialgebraData& b) {
  try {
    return convolution_inverse(LinearMap::identity(b.alg.space), b.coalg, b.alg);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInvertible)
      fail(ErrorKind::NotHopf, "identity of " + b.alg.space.name() + " is not convolution invertible");
    throw;
  }
}

inline HopfAlgebraData make_hopf(const BialgebraData& b) { return {b, antipode(b)}; }

inline Report check_hopf(const HopfAlgebraData& h) {
  Report r("Hopf algebra " + h.space().name());
  r.merge(check_bialgebra(h.bialg));
  LinearMap id = LinearMap::identity(h.space());
  LinearMap u = convolution_unit(h.coalgebra(), h.algebra());
  r.equal("antipode right inverse", convolution(id, h.antipode, h.coalgebra(), h.algebra()), u);
  r.equal("antipode left inverse", convolution(h.antipode, id, h.coalgebra(), h.algebra()), u);
  return r;
}

inline Report check_algebra_morphism(const LinearMap& f, const AlgebraData& a, const AlgebraData& b) {
  Report r("algebra morphism " + f.signature());
  r.equal("multiplicative", compose(f, a.mul), compose(b.mul, tensor_op(f, f)));
  r.equal("unital", compose(f, a.unit), b.unit);
  return r;
}

inline Report check_coalgebra_morphism(const LinearMap& f, const CoalgebraData& c, const CoalgebraData& d) {
  Report r("coalgebra morphism " + f.signature());
  r.equal("comultiplicative", compose(d.comul, f), compose(tensor_op(f, f), c.comul));
  r.equal("counital", compose(d.counit, f), c.counit);
  return r;
}

/// ψ(f∗g)φ = (ψfφ)∗(ψgφ) for an algebra morphism ψ: A → A' and a coalgebra
/// morphism φ: C' → C; also compares inverses when f is convolution invertible.
inline Report check_conv_naturality(const LinearMap& psi, const LinearMap& f, const LinearMap& g, const LinearMap& phi,
                                    const CoalgebraData& c, const AlgebraData& a, const CoalgebraData& c2,
                                    const AlgebraData& a2) {
  Report r("convolution naturality");
  r.merge(check_algebra_morphism(psi, a, a2), "psi");
  r.merge(check_coalgebra_morphism(phi, c2, c), "phi");
  r.equal("psi(f*g)phi", compose(psi, convolution(f, g, c, a), phi),
          convolution(compose(psi, f, phi), compose(psi, g, phi), c2, a2));
  if (is_convolution_invertible(f, c, a)) {
    LinearMap finv = convolution_inverse(f, c, a);
    LinearMap lhs = compose(psi, finv, phi);
    LinearMap pfp = compose(psi, f, phi);
    LinearMap u = convolution_unit(c2, a2);
    r.add("inverse transported",
          convolution(pfp, lhs, c2, a2) == u && convolution(lhs, pfp, c2, a2) == u);
  }
  return r;
}

}  // namespace hopfcleft
