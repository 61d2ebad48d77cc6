#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force searches over prime fields used to cross-check the closed forms:
 * cocycle enumeration, Z'(𝓗) enumeration and convolution inverses by direct search.
 *
 * Candidates are visited in lexicographic order of the unknown values, first unknown
 * most significant, so every result list is reproducible.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcleft/lifting.hpp"

namespace hopfcleft {

/// Unknown matrix entries (row, col) of a map source → target over F_p.
struct SearchSpace {
  BasedSpace source, target;
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::uint64_t bound = 0;
  bool full = true;  // false when a sparsity pattern restricts the unknowns

  std::int64_t p() const { return source.field().modulus(); }

  /// p^{#unknowns}, or nullopt once it exceeds the bound.
  std::optional<std::uint64_t> count() const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
      if (n > bound / static_cast<std::uint64_t>(p())) return std::nullopt;
      n *= static_cast<std::uint64_t>(p());
    }
    return n;
  }

  std::string describe() const {
    std::string s = std::to_string(unknowns.size()) + " unknowns over " + source.field().name();
    if (!full) {
      s += " on declared support {";
      for (std::size_t i = 0; i < unknowns.size(); ++i) {
        if (i) s += ", ";
        s += target.label(unknowns[i].first) + " @ " + source.label(unknowns[i].second);
      }
      s += "}";
    }
    return s;
  }
};

inline void require_prime_field(const Field& f) {
  if (!f.is_finite()) fail(ErrorKind::ValidationError, "oracle searches need a prime field, got " + f.name());
}

inline SearchSpace full_space(const BasedSpace& source, const BasedSpace& target, std::uint64_t bound) {
  require_prime_field(source.field());
  SearchSpace s{source, target, {}, bound, true};
  for (std::size_t c = 0; c < source.dim(); ++c)
    for (std::size_t r = 0; r < target.dim(); ++r) s.unknowns.emplace_back(r, c);
  return s;
}

/// Calls visit(map) for every candidate, stopping early when visit returns false.
template <class Visit>
void for_each_candidate(const SearchSpace& s, Visit&& visit) {
  auto n = s.count();
  if (!n)
    fail(ErrorKind::SearchSpaceTooLarge, s.describe() + " exceeds the bound " + std::to_string(s.bound));
  const std::int64_t p = s.p();
  const Field& f = s.source.field();
  std::vector<std::int64_t> digits(s.unknowns.size(), 0);
  for (std::uint64_t t = 0; t < *n; ++t) {
    LinearMap m(s.source, s.target);
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i]) m.set(s.unknowns[i].first, s.unknowns[i].second, Scalar(f, digits[i]));
    if (!visit(m)) return;
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
}

/// All σ: H̄⊗H̄ → A passing check_cocycle. `support` restricts the unknowns; entries
/// outside it are zero.
inline std::vector<Cocycle> enumerate_cocycles(const Measuring& m, std::uint64_t bound,
                                               const std::vector<std::pair<std::size_t, std::size_t>>* support = nullptr) {
  const BasedSpace& hs = m.h.space();
  SearchSpace s = full_space(tensor(hs, hs), m.a.alg.space, bound);
  if (support) {
    s.unknowns = *support;
    s.full = false;
  }
  std::vector<Cocycle> out;
  LinearMap hu = m.h.hopf.unit();
  LinearMap normal_src = tensor_map(hu, hu);
  for_each_candidate(s, [&](const LinearMap& sigma) {
    // Normalization is cheap and rejects most candidates before the full check.
    if (compose(sigma, normal_src) != m.a.alg.unit) return true;
    LinearMap inv(sigma.source(), sigma.target());
    Report r = check_cocycle(m, sigma, &inv);
    if (r.ok()) out.push_back({m, sigma, inv, true});
    return true;
  });
  return out;
}

namespace detail {

/// Dense structure constants mod p.
struct ModTables {
  std::int64_t p;
  std::size_t dc, da;
  // comul[k] = list of (a, b, coef) with Δ(e_k) ∋ coef e_a⊗e_b
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>> comul;
  std::vector<std::int64_t> counit;           // ε(e_k)
  std::vector<std::vector<std::int64_t>> mul;  // mul[i*da+j] = dense e_i e_j
  std::vector<std::int64_t> unit;             // η(1)
  std::vector<std::vector<std::int64_t>> f;   // f[k] = dense f(e_k)
};

inline std::vector<std::int64_t> dense_column(const LinearMap& m, std::size_t c) {
  std::vector<std::int64_t> v(m.target().dim(), 0);
  for (const auto& [r, s] : m.column(c)) v[r] = s.residue();
  return v;
}

inline ModTables tables(const LinearMap& f, const CoalgebraData& c, const AlgebraData& a) {
  ModTables t;
  t.p = f.field().modulus();
  t.dc = c.space.dim();
  t.da = a.space.dim();
  t.comul.resize(t.dc);
  for (std::size_t k = 0; k < t.dc; ++k) {
    for (const auto& [r, s] : c.comul.column(k)) t.comul[k].emplace_back(r / t.dc, r % t.dc, s.residue());
    t.counit.push_back(c.counit.entry(0, k).residue());
    t.f.push_back(dense_column(f, k));
  }
  for (std::size_t i = 0; i < t.da * t.da; ++i) t.mul.push_back(dense_column(a.mul, i));
  t.unit = dense_column(a.unit, 0);
  return t;
}

}  // namespace detail

struct OracleInverse {
  std::optional<LinearMap> inverse;  // empty: no two-sided inverse exists
  std::uint64_t candidates = 0;      // column candidates examined
};

/// Two-sided convolution inverse of f: C → A by direct search over F_p, one column of g
/// at a time. An equation (f∗g)(e_k) = ε(e_k)1 or (g∗f)(e_k) = ε(e_k)1 is tested as soon
/// as every column of g it involves has been chosen, which prunes the p^{dim C·dim A}
/// space without solving anything. `bound` caps the candidate columns examined.
inline OracleInverse oracle_convolution_inverse(const LinearMap& f, const CoalgebraData& c, const AlgebraData& a,
                                                std::uint64_t bound) {
  require_prime_field(f.field());
  detail::ModTables t = detail::tables(f, c, a);
  const std::int64_t p = t.p;
  const std::size_t dc = t.dc, da = t.da;
  // An equation becomes checkable once the largest g-column index it uses is fixed.
  std::vector<std::vector<std::pair<std::size_t, bool>>> ready(dc);  // (k, left) ; left: f∗g
  for (std::size_t k = 0; k < dc; ++k) {
    std::size_t need_l = 0, need_r = 0;
    for (const auto& [x, y, cf] : t.comul[k]) {
      need_l = std::max(need_l, y);
      need_r = std::max(need_r, x);
    }
    ready[need_l].emplace_back(k, true);
    ready[need_r].emplace_back(k, false);
  }
  std::vector<std::vector<std::int64_t>> g(dc, std::vector<std::int64_t>(da, 0));
  auto product_into = [&](std::vector<std::int64_t>& acc, const std::vector<std::int64_t>& u,
                          const std::vector<std::int64_t>& v, std::int64_t cf) {
    for (std::size_t i = 0; i < da; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < da; ++j) {
        if (!v[j]) continue;
        const std::int64_t w = u[i] * v[j] % p * cf % p;
        const auto& col = t.mul[i * da + j];
        for (std::size_t r = 0; r < da; ++r)
          if (col[r]) acc[r] = (acc[r] + w * col[r]) % p;
      }
    }
  };
  OracleInverse out;
  std::optional<std::vector<std::vector<std::int64_t>>> found;
  std::uint64_t per_col = 1;
  for (std::size_t i = 0; i < da; ++i) per_col *= static_cast<std::uint64_t>(p);
  // While column q varies, the ready equations are affine in g[q]: value = base + Σ g[q][i]·lin[i].
  // Stepping the column like an odometer adds one lin vector per digit increment (wraps
  // included, since p·lin = 0).
  struct Frame {
    std::vector<std::int64_t> base, value, target;
    std::vector<std::vector<std::int64_t>> lin;
    std::uint64_t seen = 0;
  };
  std::vector<Frame> frames(dc);
  auto evaluate = [&](std::size_t q) {
    std::vector<std::int64_t> v;
    for (const auto& [k, left] : ready[q]) {
      std::vector<std::int64_t> acc(da, 0);
      for (const auto& [x, y, cf] : t.comul[k]) {
        if (left) product_into(acc, t.f[x], g[y], cf);
        else product_into(acc, g[x], t.f[y], cf);
      }
      v.insert(v.end(), acc.begin(), acc.end());
    }
    return v;
  };
  auto enter = [&](std::size_t q) {
    Frame& fr = frames[q];
    std::fill(g[q].begin(), g[q].end(), 0);
    fr.base = evaluate(q);
    fr.lin.assign(da, {});
    for (std::size_t i = 0; i < da; ++i) {
      g[q][i] = 1;
      auto v = evaluate(q);
      for (std::size_t r = 0; r < v.size(); ++r) v[r] = ((v[r] - fr.base[r]) % p + p) % p;
      fr.lin[i] = std::move(v);
      g[q][i] = 0;
    }
    fr.target.clear();
    for (const auto& [k, left] : ready[q])
      for (std::size_t r = 0; r < da; ++r) fr.target.push_back(t.counit[k] * t.unit[r] % p);
    fr.value = fr.base;
    fr.seen = 0;
  };
  auto step = [&](std::size_t q) {
    Frame& fr = frames[q];
    for (std::size_t i = da; i-- > 0;) {
      for (std::size_t r = 0; r < fr.value.size(); ++r) fr.value[r] = (fr.value[r] + fr.lin[i][r]) % p;
      if (++g[q][i] < p) return;
      g[q][i] = 0;
    }
  };
  std::size_t q = 0;
  enter(0);
  while (true) {
    Frame& fr = frames[q];
    if (fr.seen == per_col) {
      if (q == 0) break;
      --q;
      step(q);
      continue;
    }
    ++fr.seen;
    if (++out.candidates > bound)
      fail(ErrorKind::SearchSpaceTooLarge, "convolution inverse search exceeded " + std::to_string(bound) + " candidates");
    if (fr.value != fr.target) {
      step(q);
      continue;
    }
    if (q + 1 == dc) {
      if (found) fail(ErrorKind::TheoremViolation, "two distinct two-sided convolution inverses");
      found = g;
      step(q);
      continue;
    }
    ++q;
    enter(q);
  }
  if (found) {
    LinearMap m(c.space, a.space);
    for (std::size_t k = 0; k < dc; ++k)
      for (std::size_t r = 0; r < da; ++r)
        if ((*found)[k][r]) m.set(r, k, Scalar(f.field(), (*found)[k][r]));
    out.inverse = m;
  }
  return out;
}

/// Z'(𝓗) by search over the values on (R⊗1)⊗(R⊗1), extended to 𝓗⊗𝓗 by the restriction
/// relation and filtered by membership in Z'(𝓗).
inline std::vector<ScalarCocycleH> enumerate_Zprime(const Bosonization& b, std::uint64_t bound) {
  const BasedSpace& rs = b.r.r.space();
  SearchSpace s = full_space(tensor(rs, rs), BasedSpace::unit(rs.field()), bound);
  LinearMap red = reduce_to_r(b);
  LinearMap hu = b.hopf.unit();
  LinearMap one = LinearMap::identity(BasedSpace::unit(rs.field()));
  std::vector<ScalarCocycleH> out;
  for_each_candidate(s, [&](const LinearMap& pi) {
    LinearMap sigma = compose(pi, red);
    if (compose(sigma, tensor_op(hu, hu)) != one) return true;
    if (!check_classical_cocycle_identity(b.hopf, sigma).ok()) return true;
    ScalarCocycleH c = check_Zprime(b, sigma);
    if (c.in_Zprime) out.push_back(std::move(c));
    return true;
  });
  return out;
}

}  // namespace hopfcleft
