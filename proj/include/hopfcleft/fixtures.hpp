#pragma once

/**
 * @file fixtures.hpp
 * @brief Built-in small objects: cyclic group algebras, quantum lines in YD over them,
 * and a few deliberately broken structures used as negative cases.
 */

#include <string>
#include <vector>

#include "hopfcleft/lifting.hpp"

namespace hopfcleft::fixtures {

inline std::string power_label(const std::string& base, int n) {
  if (n == 0) return "1";
  if (n == 1) return base;
  return base + std::to_string(n);
}

inline std::vector<std::string> power_labels(const std::string& base, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(power_label(base, i));
  return out;
}

/// kC_n with basis 1, g, g2, ...
inline HopfAlgebraData group_algebra(Field f, int n, const std::string& name = "K") {
  if (n < 1) fail(ErrorKind::ValidationError, "group order must be positive");
  BasedSpace s = BasedSpace::atom(f, name, power_labels("g", n));
  BasedSpace u = BasedSpace::unit(f);
  const Scalar one = Scalar::one(f);
  LinearMap mul(tensor(s, s), s), comul(s, tensor(s, s)), unit(u, s), counit(s, u);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul.set((a + b) % n, a * n + b, one);
    comul.set(a * n + a, a, one);
    counit.set(0, a, one);
  }
  unit.set(0, 0, one);
  return classical_hopf(s, mul, unit, comul, counit);
}

/// The monoid algebra of {1, e} with e² = e, e grouplike: a bialgebra without antipode.
inline BialgebraData idempotent_monoid(Field f) {
  BasedSpace s = BasedSpace::atom(f, "M", {"1", "e"});
  BasedSpace u = BasedSpace::unit(f);
  const Scalar one = Scalar::one(f);
  LinearMap mul(tensor(s, s), s), comul(s, tensor(s, s)), unit(u, s), counit(s, u);
  mul.set(0, 0, one);
  mul.set(1, 1, one);
  mul.set(1, 2, one);
  mul.set(1, 3, one);
  comul.set(0, 0, one);
  comul.set(3, 1, one);
  unit.set(0, 0, one);
  counit.set(0, 0, one);
  counit.set(0, 1, one);
  return {{s, mul, unit}, {s, comul, counit}, flip(s, s)};
}

/// kC_4 with g·g changed to g; associativity breaks at g⊗g⊗g2.
inline AlgebraData corrupted_c4(Field f) {
  AlgebraData a = group_algebra(f, 4).algebra();
  a.mul.set(2, 1 * 4 + 1, Scalar::zero(f));
  a.mul.set(1, 1 * 4 + 1, Scalar::one(f));
  return a;
}

/// R = k[x]/(x^N) in YD over kC_m: g·x = q x, δ(x) = g⊗x, x primitive; deg xᵏ = k.
/// Needs q^m = 1 and q of exact order N (N ≥ 2).
inline GradedYDHopf quantum_line(Field f, int m, const Scalar& q, int n_nil, const std::string& name = "R") {
  if (n_nil < 2) fail(ErrorKind::ValidationError, "nilpotency order must be at least 2");
  if (!q.pow(m).is_one()) fail(ErrorKind::ValidationError, "q^m must be 1 for the action to factor through C_m");
  for (int k = 1; k < n_nil; ++k)
    if (q.pow(k).is_one()) fail(ErrorKind::ValidationError, "q must have exact order N");
  if (!q.pow(n_nil).is_one()) fail(ErrorKind::ValidationError, "q must have exact order N");
  HopfPtr k = share(group_algebra(f, m));
  const BasedSpace& ks = k->space();
  BasedSpace rs = BasedSpace::atom(f, name, power_labels("x", n_nil));
  BasedSpace u = BasedSpace::unit(f);
  const Scalar one = Scalar::one(f);
  const std::size_t n = n_nil;
  LinearMap act(tensor(ks, rs), rs), co(rs, tensor(ks, rs));
  for (int a = 0; a < m; ++a)
    for (std::size_t e = 0; e < n; ++e) act.set(e, a * n + e, q.pow(static_cast<std::int64_t>(a * e)));
  for (std::size_t e = 0; e < n; ++e) co.set((e % m) * n + e, e, one);
  YDModule obj{{k, rs, act}, co};

  LinearMap mul(tensor(rs, rs), rs), unit(u, rs), counit(rs, u);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; a + b < n; ++b) mul.set(a + b, a * n + b, one);
  unit.set(0, 0, one);
  counit.set(0, 0, one);

  // Δ(xᵉ) = Δ(x^{e-1})Δ(x) in the braided tensor square.
  BasedSpace rr = tensor(rs, rs);
  LinearMap prod = compose(tensor_op(mul, mul), tensor_op(rs, braiding(obj, obj.module), rs));
  LinearMap comul(rs, rr);
  comul.set(0, 0, one);
  if (n > 1) {
    comul.set(1 * n + 0, 1, one);
    comul.set(0 * n + 1, 1, one);
  }
  auto vec = [&](std::size_t e) {
    LinearMap v(u, rr);
    for (const auto& [r, c] : comul.column(e)) v.set(r, 0, c);
    return v;
  };
  for (std::size_t e = 2; e < n; ++e) {
    LinearMap v = compose(prod, tensor_op(vec(e - 1), vec(1)));
    for (const auto& [r, c] : v.column(0)) comul.set(r, e, c);
  }
  GradedYDHopf g{make_yd_hopf(obj, mul, unit, comul, counit), {}};
  std::vector<int> deg;
  for (int e = 0; e < n_nil; ++e) deg.push_back(e);
  g.grading.by_atom[name] = deg;
  return g;
}

/// The standard family: over F3 kC_2 with q = -1, over F5 kC_4 with q = -1.
inline GradedYDHopf line_c2_f3() { return quantum_line(Field::prime(3), 2, Scalar(Field::prime(3), -1), 2); }
inline GradedYDHopf line_c4_f5() { return quantum_line(Field::prime(5), 4, Scalar(Field::prime(5), -1), 2); }
inline GradedYDHopf line_c4_zeta4() {
  Field f = Field::cyclotomic(4);
  return quantum_line(f, 4, root_of_unity(f, 4), 4);
}

/// X = span{x, y} over kC_2 with g swapping x, y but δx = g⊗x, δy = 1⊗y: not YD.
inline YDModule broken_yd(Field f) {
  HopfPtr k = share(group_algebra(f, 2));
  const BasedSpace& ks = k->space();
  BasedSpace xs = BasedSpace::atom(f, "X", {"x", "y"});
  const Scalar one = Scalar::one(f);
  LinearMap act(tensor(ks, xs), xs), co(xs, tensor(ks, xs));
  act.set(0, 0, one);
  act.set(1, 1, one);
  act.set(1, 2, one);
  act.set(0, 3, one);
  co.set(1 * 2 + 0, 0, one);
  co.set(0 * 2 + 1, 1, one);
  return {{k, xs, act}, co};
}

/// A = span{1, t}, t² = 1, with g·t = -t for the generator g of the cyclic ambient.
inline DAlgebra sign_algebra(const HopfPtr& k) {
  const Field& f = k->field();
  const BasedSpace& ks = k->space();
  const std::size_t m = ks.dim();
  if (m % 2 != 0) fail(ErrorKind::ValidationError, "sign action needs an even cyclic group");
  BasedSpace as = BasedSpace::atom(f, "A", {"1", "t"});
  BasedSpace u = BasedSpace::unit(f);
  const Scalar one = Scalar::one(f);
  LinearMap mul(tensor(as, as), as), unit(u, as), act(tensor(ks, as), as);
  mul.set(0, 0, one);
  mul.set(1, 1, one);
  mul.set(1, 2, one);
  mul.set(0, 3, one);
  unit.set(0, 0, one);
  for (std::size_t a = 0; a < m; ++a) {
    act.set(0, a * 2, one);
    act.set(1, a * 2 + 1, a % 2 ? -one : one);
  }
  return {{as, mul, unit}, {k, as, act}};
}

/// ν = ε̄⊗id_A.
inline Measuring trivial_measuring(const YDHopf& h, const DAlgebra& a) {
  return {h, a, tensor_map(h.hopf.counit(), a.alg.space)};
}

/// A classical K acting on the algebra of R by the YD action, as a module algebra over
/// the trivial ambient.
inline Measuring module_algebra_measuring(const HopfAlgebraData& k, const YDHopf& r) {
  YDHopf h = classical(k);
  DAlgebra a{r.hopf.algebra(), {h.base(), r.space(), LinearMap::identity(r.space())}};
  return {h, a, r.obj.module.action};
}

/// The cocycle π_λ on a quantum line with N = 2: π(x, x) = λ, normalized elsewhere.
inline LinearMap line_pi(const YDHopf& r, const Scalar& lambda) {
  const BasedSpace& rs = r.space();
  LinearMap pi = tensor_map(r.hopf.counit(), r.hopf.counit());
  pi.set(0, 1 * rs.dim() + 1, lambda);
  return pi;
}

}  // namespace hopfcleft::fixtures
