#include <gtest/gtest.h>

#include <random>

#include "hopfcleft/linspace.hpp"

using namespace hopfcleft;

namespace {

Field Q() { return Field::rationals(); }
Scalar q(long n, long d = 1) { return Scalar(Q(), mpq_class(n, d)); }

LinearMap diag(const BasedSpace& v, std::vector<long> entries) {
  LinearMap m(v, v);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, q(entries[i]));
  return m;
}

LinearMap random_map(const BasedSpace& s, const BasedSpace& t, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  LinearMap m(s, t);
  for (std::size_t c = 0; c < s.dim(); ++c)
    for (std::size_t r = 0; r < t.dim(); ++r) m.set(r, c, q(d(rng)));
  return m;
}

}  // namespace

TEST(LinSpace, UnitAndStrictness) {
  auto x = BasedSpace::atom(Q(), "X", {"a", "b"});
  auto y = BasedSpace::atom(Q(), "Y", {"c", "d", "e"});
  auto z = BasedSpace::atom(Q(), "Z", {"f", "g"});
  auto one = BasedSpace::unit(Q());
  EXPECT_EQ(one.dim(), 1u);
  EXPECT_EQ(one.label(0), "1");
  EXPECT_EQ(tensor(one, x), x);
  EXPECT_EQ(tensor(x, one), x);
  EXPECT_EQ(tensor(tensor(x, y), z), tensor(x, tensor(y, z)));
  auto xyz = tensor(x, y, z);
  EXPECT_EQ(xyz.dim(), 12u);
  EXPECT_EQ(xyz.label(0), "a⊗c⊗f");
  EXPECT_EQ(xyz.label(11), "b⊗e⊗g");
  EXPECT_EQ(xyz.index_of({"b", "c", "g"}), 7u);
  EXPECT_THROW(BasedSpace::atom(Q(), "W", {"a", "a"}), Error);
}

TEST(LinSpace, ComposeIdentityAndSwap) {
  auto v = BasedSpace::atom(Q(), "V", {"u", "w"});
  std::mt19937 rng(1);
  auto f = random_map(v, v, rng);
  EXPECT_EQ(compose(LinearMap::identity(v), f), f);
  EXPECT_EQ(compose(f, LinearMap::identity(v)), f);
  LinearMap swap = LinearMap::from_rows(v, v, {{q(0), q(1)}, {q(1), q(0)}});
  EXPECT_EQ(compose(swap, swap), LinearMap::identity(v));
  auto w = BasedSpace::atom(Q(), "W", {"p"});
  EXPECT_THROW(compose(f, LinearMap::identity(w)), Error);
}

TEST(LinSpace, KroneckerDiag) {
  auto v = BasedSpace::atom(Q(), "V", {"a", "b"});
  auto w = BasedSpace::atom(Q(), "W", {"c", "d"});
  LinearMap k = tensor_map(diag(v, {1, 2}), diag(w, {3, 4}));
  LinearMap expected(tensor(v, w), tensor(v, w));
  long vals[] = {3, 4, 6, 8};
  for (std::size_t i = 0; i < 4; ++i) expected.set(i, i, q(vals[i]));
  EXPECT_EQ(k, expected);
  EXPECT_EQ(tensor_map(LinearMap::identity(v), LinearMap::identity(w)), LinearMap::identity(tensor(v, w)));
  EXPECT_EQ(tensor_map(LinearMap::scalar(q(2)), LinearMap::scalar(q(5))), LinearMap::scalar(q(10)));
}

TEST(LinSpace, Bifunctoriality) {
  std::mt19937 rng(3);
  auto a = BasedSpace::atom(Q(), "A", {"a0", "a1"});
  auto b = BasedSpace::atom(Q(), "B", {"b0", "b1", "b2"});
  auto c = BasedSpace::atom(Q(), "C", {"c0", "c1"});
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_map(b, c, rng), f2 = random_map(a, b, rng);
    auto g = random_map(a, b, rng), g2 = random_map(c, a, rng);
    EXPECT_EQ(tensor_map(compose(f, f2), compose(g, g2)), compose(tensor_map(f, g), tensor_map(f2, g2)));
    EXPECT_EQ(compose(tensor_op(f, g), tensor_op(f2, g2)), compose(tensor_map(f, g), tensor_map(f2, g2)));
  }
}

TEST(LinSpace, Permutations) {
  auto x = BasedSpace::atom(Q(), "X", {"a", "b"});
  auto y = BasedSpace::atom(Q(), "Y", {"c", "d", "e"});
  auto fl = flip(x, y);
  EXPECT_EQ(fl.source(), tensor(x, y));
  EXPECT_EQ(fl.target(), tensor(y, x));
  // a⊗e ↦ e⊗a
  std::size_t src = *tensor(x, y).index_of({"a", "e"});
  std::size_t tgt = *tensor(y, x).index_of({"e", "a"});
  EXPECT_TRUE(fl.entry(tgt, src).is_one());
  EXPECT_EQ(compose(flip(y, x), fl), LinearMap::identity(tensor(x, y)));
  auto z = BasedSpace::atom(Q(), "Z", {"f", "g"});
  auto cyc = permutation({x, y, z}, {2, 0, 1});
  EXPECT_EQ(cyc.target(), tensor(z, x, y));
  std::size_t s = *tensor(x, y, z).index_of({"b", "d", "f"});
  std::size_t t = *tensor(z, x, y).index_of({"f", "b", "d"});
  EXPECT_TRUE(cyc.entry(t, s).is_one());
}

TEST(LinSpace, EqualizerAndKernel) {
  auto v = BasedSpace::atom(Q(), "V", {"a", "b"});
  auto f = diag(v, {1, 1});
  auto e = equalizer(f, f, "E");
  EXPECT_EQ(e.space, v);
  auto z = equalizer(LinearMap::identity(v), LinearMap::zero(v, v), "E");
  EXPECT_EQ(z.space.dim(), 0u);
  auto w = BasedSpace::atom(Q(), "W", {"x", "y", "z"});
  LinearMap p = LinearMap::from_rows(w, v, {{q(1), q(1), q(0)}, {q(0), q(0), q(1)}});
  auto k = equalizer(p, LinearMap::zero(w, v), "K");
  ASSERT_EQ(k.space.dim(), 1u);
  EXPECT_EQ(k.space.label(0), "y");
  EXPECT_EQ(compose(p, k.iota), LinearMap::zero(k.space, v));
  EXPECT_EQ(k.iota.describe_column(0), "(-1)·x + y");
}

TEST(LinSpace, Solve) {
  auto v = BasedSpace::atom(Q(), "V", {"a", "b"});
  auto one = BasedSpace::unit(Q());
  LinearMap b = LinearMap::from_rows(one, v, {{q(1)}, {q(1)}});
  auto s = solve_linear(diag(v, {2, 3}), b);
  EXPECT_TRUE(s.unique);
  EXPECT_EQ(s.x, LinearMap::from_rows(one, v, {{q(1, 2)}, {q(1, 3)}}));
  EXPECT_EQ(solve_linear(LinearMap::identity(v), b).x, b);
  LinearMap sing = LinearMap::from_rows(v, v, {{q(1), q(1)}, {q(1), q(1)}});
  LinearMap bad = LinearMap::from_rows(one, v, {{q(1)}, {q(2)}});
  try {
    solve_linear(sing, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
  EXPECT_THROW(inverse(sing), Error);
  LinearMap m = LinearMap::from_rows(v, v, {{q(1), q(2)}, {q(3), q(4)}});
  EXPECT_EQ(compose(m, inverse(m)), LinearMap::identity(v));
}
