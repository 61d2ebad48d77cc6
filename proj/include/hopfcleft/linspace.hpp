#pragma once

/**
 * @file linspace.hpp
 * @brief Based vector spaces, linear maps and their tensor calculus.
 *
 * A `BasedSpace` is a flat sequence of atomic spaces; tensor products concatenate
 * sequences, so (X⊗Y)⊗Z and X⊗(Y⊗Z) are literally the same space and the unit 𝟙 is
 * the empty sequence (dimension 1, basis label "1"). Basis vectors of a tensor space
 * are ordered lexicographically with the leftmost factor most significant.
 *
 * A `LinearMap` stores its matrix column by column, keeping only nonzero entries.
 * An `Op` is an unevaluated tensor product of maps (or a permutation of tensor
 * factors); `compose` pushes every source basis vector through a chain of ops, so
 * intermediate spaces like H^{⊗6} are never materialized.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfcleft/error.hpp"
#include "hopfcleft/scalar.hpp"

namespace hopfcleft {

struct Atom {
  std::string name;
  std::vector<std::string> labels;
};

class BasedSpace {
 public:
  explicit BasedSpace(Field f) : field_(f) {}

  /// The monoidal unit 𝟙.
  static BasedSpace unit(Field f) { return BasedSpace(f); }

  static BasedSpace atom(Field f, std::string name, std::vector<std::string> labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) fail(ErrorKind::ValidationError, "empty basis label in space " + name);
      for (std::size_t j = 0; j < i; ++j)
        if (labels[i] == labels[j])
          fail(ErrorKind::ValidationError, "duplicate basis label '" + labels[i] + "' in space " + name);
    }
    BasedSpace s(f);
    s.atoms_.push_back(std::make_shared<const Atom>(Atom{std::move(name), std::move(labels)}));
    s.dim_ = s.atoms_.back()->labels.size();
    return s;
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool is_unit() const { return atoms_.empty(); }
  const std::vector<std::shared_ptr<const Atom>>& atoms() const { return atoms_; }

  /// Atom-name description, e.g. "H ⊗ A"; "1" for the unit.
  std::string name() const {
    if (atoms_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) s += " ⊗ ";
      s += atoms_[i]->name;
    }
    return s;
  }

  /// Factor indices of basis vector `i`, one per atom.
  std::vector<std::size_t> multi_index(std::size_t i) const {
    std::vector<std::size_t> out(atoms_.size());
    for (std::size_t k = atoms_.size(); k-- > 0;) {
      const std::size_t d = atoms_[k]->labels.size();
      out[k] = i % d;
      i /= d;
    }
    return out;
  }

  std::vector<std::string> label_tuple(std::size_t i) const {
    std::vector<std::string> out;
    auto mi = multi_index(i);
    for (std::size_t k = 0; k < atoms_.size(); ++k) out.push_back(atoms_[k]->labels[mi[k]]);
    return out;
  }

  std::string label(std::size_t i) const {
    if (atoms_.empty()) return "1";
    std::string s;
    auto t = label_tuple(i);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) s += "⊗";
      s += t[k];
    }
    return s;
  }

  /// Inverse of `label_tuple`; the unit space accepts {} or {"1"}.
  std::optional<std::size_t> index_of(const std::vector<std::string>& tuple) const {
    if (atoms_.empty()) {
      if (tuple.empty() || (tuple.size() == 1 && tuple[0] == "1")) return 0;
      return std::nullopt;
    }
    if (tuple.size() != atoms_.size()) return std::nullopt;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      const auto& ls = atoms_[k]->labels;
      auto it = std::find(ls.begin(), ls.end(), tuple[k]);
      if (it == ls.end()) return std::nullopt;
      idx = idx * ls.size() + static_cast<std::size_t>(it - ls.begin());
    }
    return idx;
  }

  friend BasedSpace tensor(const BasedSpace& a, const BasedSpace& b) {
    if (a.field_ != b.field_) fail(ErrorKind::FieldMismatch, a.field_.name() + " vs " + b.field_.name());
    BasedSpace s(a.field_);
    s.atoms_ = a.atoms_;
    s.atoms_.insert(s.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
    s.dim_ = a.dim_ * b.dim_;
    return s;
  }

  bool operator==(const BasedSpace& o) const {
    if (field_ != o.field_ || atoms_.size() != o.atoms_.size()) return false;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (atoms_[k] == o.atoms_[k]) continue;
      if (atoms_[k]->name != o.atoms_[k]->name || atoms_[k]->labels != o.atoms_[k]->labels) return false;
    }
    return true;
  }
  bool operator!=(const BasedSpace& o) const { return !(*this == o); }

 private:
  Field field_;
  std::vector<std::shared_ptr<const Atom>> atoms_;
  std::size_t dim_ = 1;
};

/// n-fold tensor power; power(X, 0) = 𝟙.
inline BasedSpace power(const BasedSpace& x, std::size_t n) {
  BasedSpace s = BasedSpace::unit(x.field());
  for (std::size_t i = 0; i < n; ++i) s = tensor(s, x);
  return s;
}

template <class... Rest>
BasedSpace tensor(const BasedSpace& a, const BasedSpace& b, const Rest&... rest) {
  return tensor(tensor(a, b), rest...);
}

/// Sparse vector: (index, coefficient) pairs sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;

class LinearMap {
 public:
  using Column = std::vector<std::pair<std::uint32_t, Scalar>>;

  LinearMap(BasedSpace source, BasedSpace target)
      : src_(std::move(source)), tgt_(std::move(target)), cols_(src_.dim()) {
    if (src_.field() != tgt_.field()) fail(ErrorKind::FieldMismatch, "source and target fields differ");
  }

  static LinearMap zero(const BasedSpace& source, const BasedSpace& target) { return LinearMap(source, target); }

  static LinearMap identity(const BasedSpace& x) {
    LinearMap m(x, x);
    const Scalar one = Scalar::one(x.field());
    for (std::size_t i = 0; i < x.dim(); ++i) m.cols_[i].emplace_back(static_cast<std::uint32_t>(i), one);
    m.identity_ = true;
    return m;
  }

  /// The map 𝟙 → 𝟙 given by multiplication with `s`.
  static LinearMap scalar(const Scalar& s) {
    BasedSpace u = BasedSpace::unit(s.field());
    LinearMap m(u, u);
    m.set(0, 0, s);
    return m;
  }

  /// Builds a map from a row-major dense matrix (target.dim rows, source.dim columns).
  static LinearMap from_rows(const BasedSpace& source, const BasedSpace& target,
                             const std::vector<std::vector<Scalar>>& rows) {
    if (rows.size() != target.dim()) fail(ErrorKind::ShapeMismatch, "row count does not match target dimension");
    LinearMap m(source, target);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != source.dim()) fail(ErrorKind::ShapeMismatch, "column count does not match source dimension");
      for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  const BasedSpace& source() const { return src_; }
  const BasedSpace& target() const { return tgt_; }
  const Field& field() const { return src_.field(); }
  const Column& column(std::size_t c) const { return cols_[c]; }
  bool is_identity_hint() const { return identity_; }

  Scalar entry(std::size_t r, std::size_t c) const {
    const auto& col = cols_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return Scalar::zero(field());
  }

  void set(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= tgt_.dim() || c >= src_.dim()) fail(ErrorKind::ShapeMismatch, "entry out of range");
    if (v.field() != field()) fail(ErrorKind::FieldMismatch, "entry field differs from map field");
    identity_ = false;
    auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
      if (v.is_zero())
        col.erase(it);
      else
        it->second = v;
    } else if (!v.is_zero()) {
      col.insert(it, {static_cast<std::uint32_t>(r), v});
    }
  }

  void add_to(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, entry(r, c) + v); }

  void set_column(std::size_t c, const SparseVec& v) {
    identity_ = false;
    Column col;
    for (const auto& [i, s] : v)
      if (!s.is_zero()) col.emplace_back(static_cast<std::uint32_t>(i), s);
    cols_.at(c) = std::move(col);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  std::vector<std::vector<Scalar>> dense() const {
    std::vector<std::vector<Scalar>> rows(tgt_.dim(), std::vector<Scalar>(src_.dim(), Scalar::zero(field())));
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (const auto& [r, v] : cols_[c]) rows[r][c] = v;
    return rows;
  }

  /// Same matrix, reinterpreted between other spaces of equal dimensions.
  LinearMap retyped(const BasedSpace& source, const BasedSpace& target) const {
    if (source.dim() != src_.dim() || target.dim() != tgt_.dim())
      fail(ErrorKind::ShapeMismatch, "retyping requires equal dimensions");
    LinearMap m(source, target);
    m.cols_ = cols_;
    m.identity_ = identity_ && source == target;
    return m;
  }

  LinearMap operator+(const LinearMap& o) const { return combine(o, false); }
  LinearMap operator-(const LinearMap& o) const { return combine(o, true); }

  friend LinearMap operator*(const Scalar& s, const LinearMap& m) {
    LinearMap r(m.src_, m.tgt_);
    if (s.is_zero()) return r;
    for (std::size_t c = 0; c < m.cols_.size(); ++c)
      for (const auto& [row, v] : m.cols_[c]) r.cols_[c].emplace_back(row, s * v);
    return r;
  }

  bool operator==(const LinearMap& o) const { return src_ == o.src_ && tgt_ == o.tgt_ && cols_ == o.cols_; }
  bool operator!=(const LinearMap& o) const { return !(*this == o); }

  /// First source basis index whose image differs, if any. Spaces must agree.
  std::optional<std::size_t> first_difference(const LinearMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_)
      fail(ErrorKind::ShapeMismatch, "comparing maps " + signature() + " and " + o.signature());
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (cols_[c] != o.cols_[c]) return c;
    return std::nullopt;
  }

  /// Human-readable image of basis vector c, e.g. "2·x⊗g + 1".
  std::string describe_column(std::size_t c) const { return describe_vector(tgt_, cols_.at(c)); }

  template <class Col>
  static std::string describe_vector(const BasedSpace& space, const Col& col) {
    if (col.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [r, v] : col) {
      if (!first) s += " + ";
      first = false;
      if (!v.is_one()) s += "(" + v.to_string() + ")·";
      s += space.label(r);
    }
    return s;
  }

  std::string signature() const { return src_.name() + " → " + tgt_.name(); }

 private:
  LinearMap combine(const LinearMap& o, bool subtract) const {
    if (src_ != o.src_ || tgt_ != o.tgt_)
      fail(ErrorKind::ShapeMismatch, "adding maps " + signature() + " and " + o.signature());
    LinearMap r(src_, tgt_);
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      const auto& a = cols_[c];
      const auto& b = o.cols_[c];
      auto& out = r.cols_[c];
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
          ++j;
        } else {
          Scalar v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
          if (!v.is_zero()) out.emplace_back(a[i].first, v);
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  BasedSpace src_, tgt_;
  std::vector<Column> cols_;
  bool identity_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const LinearMap& m) {
  os << m.signature() << " {";
  for (std::size_t c = 0; c < m.source().dim(); ++c)
    os << (c ? "; " : " ") << m.source().label(c) << " ↦ " << m.describe_column(c);
  return os << " }";
}

/// One layer of a composite: a tensor product of maps, or a permutation of tensor blocks.
class Op {
 public:
  Op(const LinearMap& m) : factors_{m}, src_(m.source()), tgt_(m.target()) {}  // NOLINT(implicit)

  /// Tensor product of maps, leftmost factor most significant.
  static Op tensor_of(std::vector<LinearMap> factors) {
    if (factors.empty()) fail(ErrorKind::ShapeMismatch, "empty tensor product");
    Op op(factors.front());
    op.factors_ = std::move(factors);
    op.src_ = BasedSpace::unit(op.factors_.front().field());
    op.tgt_ = op.src_;
    for (const auto& f : op.factors_) {
      op.src_ = tensor(op.src_, f.source());
      op.tgt_ = tensor(op.tgt_, f.target());
    }
    return op;
  }

  /// Reorders tensor blocks: block k of the output is input block `order[k]`.
  static Op permutation(std::vector<BasedSpace> blocks, std::vector<std::size_t> order) {
    if (blocks.size() != order.size()) fail(ErrorKind::ShapeMismatch, "permutation arity mismatch");
    std::vector<bool> seen(order.size(), false);
    for (auto k : order) {
      if (k >= order.size() || seen[k]) fail(ErrorKind::ShapeMismatch, "not a permutation");
      seen[k] = true;
    }
    Op op(LinearMap::identity(blocks.empty() ? BasedSpace::unit(Field::rationals()) : blocks.front()));
    op.factors_.clear();
    op.src_ = BasedSpace::unit(blocks.front().field());
    op.tgt_ = op.src_;
    for (const auto& b : blocks) op.src_ = tensor(op.src_, b);
    for (auto k : order) op.tgt_ = tensor(op.tgt_, blocks[k]);
    op.blocks_ = std::move(blocks);
    op.order_ = std::move(order);
    return op;
  }

  const BasedSpace& source() const { return src_; }
  const BasedSpace& target() const { return tgt_; }
  bool is_permutation() const { return !blocks_.empty(); }
  const std::vector<LinearMap>& factors() const { return factors_; }

  SparseVec apply(const SparseVec& v) const { return is_permutation() ? apply_permutation(v) : apply_tensor(v); }

 private:
  SparseVec apply_tensor(const SparseVec& v) const {
    const std::size_t k = factors_.size();
    if (k == 1 && factors_[0].is_identity_hint()) return v;
    std::vector<std::uint64_t> src_dim(k), tgt_stride(k);
    std::uint64_t stride = 1;
    for (std::size_t j = k; j-- > 0;) {
      src_dim[j] = factors_[j].source().dim();
      tgt_stride[j] = stride;
      stride *= factors_[j].target().dim();
    }
    std::unordered_map<std::uint64_t, Scalar> acc;
    std::vector<std::size_t> idx(k);
    for (const auto& [index, coef] : v) {
      std::uint64_t rest = index;
      for (std::size_t j = k; j-- > 0;) {
        idx[j] = static_cast<std::size_t>(rest % src_dim[j]);
        rest /= src_dim[j];
      }
      expand(0, 0, coef, idx, tgt_stride, acc);
    }
    return finish(acc);
  }

  void expand(std::size_t j, std::uint64_t out, const Scalar& coef, const std::vector<std::size_t>& idx,
              const std::vector<std::uint64_t>& stride, std::unordered_map<std::uint64_t, Scalar>& acc) const {
    if (j == factors_.size()) {
      auto it = acc.find(out);
      if (it == acc.end())
        acc.emplace(out, coef);
      else
        it->second += coef;
      return;
    }
    const LinearMap& f = factors_[j];
    if (f.is_identity_hint()) {
      expand(j + 1, out + idx[j] * stride[j], coef, idx, stride, acc);
      return;
    }
    for (const auto& [r, val] : f.column(idx[j])) expand(j + 1, out + r * stride[j], coef * val, idx, stride, acc);
  }

  SparseVec apply_permutation(const SparseVec& v) const {
    const std::size_t k = blocks_.size();
    std::vector<std::uint64_t> dims(k), out_stride(k);
    for (std::size_t j = 0; j < k; ++j) dims[j] = blocks_[j].dim();
    std::uint64_t stride = 1;
    for (std::size_t pos = k; pos-- > 0;) {
      out_stride[order_[pos]] = stride;
      stride *= dims[order_[pos]];
    }
    SparseVec out;
    out.reserve(v.size());
    for (const auto& [index, coef] : v) {
      std::uint64_t rest = index, o = 0;
      for (std::size_t j = k; j-- > 0;) {
        o += (rest % dims[j]) * out_stride[j];
        rest /= dims[j];
      }
      out.emplace_back(o, coef);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  static SparseVec finish(std::unordered_map<std::uint64_t, Scalar>& acc) {
    SparseVec out;
    out.reserve(acc.size());
    for (auto& [i, s] : acc)
      if (!s.is_zero()) out.emplace_back(i, std::move(s));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  std::vector<LinearMap> factors_;
  std::vector<BasedSpace> blocks_;
  std::vector<std::size_t> order_;
  BasedSpace src_, tgt_;
};

namespace detail {
inline void flatten_into(std::vector<LinearMap>& out, const LinearMap& m) { out.push_back(m); }
inline void flatten_into(std::vector<LinearMap>& out, const Op& op) {
  if (op.is_permutation()) fail(ErrorKind::ShapeMismatch, "cannot tensor a block permutation lazily");
  out.insert(out.end(), op.factors().begin(), op.factors().end());
}
inline void flatten_into(std::vector<LinearMap>& out, const BasedSpace& x) { out.push_back(LinearMap::identity(x)); }
}  // namespace detail

/// Lazy tensor product f₁ ⊗ f₂ ⊗ …; a `BasedSpace` argument stands for its identity map.
template <class... Ts>
Op tensor_op(const Ts&... parts) {
  std::vector<LinearMap> fs;
  (detail::flatten_into(fs, parts), ...);
  return Op::tensor_of(std::move(fs));
}

/// Evaluates `ops[0] ∘ ops[1] ∘ … ∘ ops[n-1]` column by column.
inline LinearMap compose_ops(const std::vector<Op>& ops) {
  if (ops.empty()) fail(ErrorKind::ShapeMismatch, "empty composition");
  for (std::size_t i = 0; i + 1 < ops.size(); ++i)
    if (ops[i].source() != ops[i + 1].target())
      fail(ErrorKind::ShapeMismatch, "cannot compose " + ops[i].source().name() + " ← " + ops[i + 1].target().name());
  const BasedSpace& src = ops.back().source();
  LinearMap out(src, ops.front().target());
  const Scalar one = Scalar::one(src.field());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    SparseVec v{{c, one}};
    for (std::size_t i = ops.size(); i-- > 0 && !v.empty();) v = ops[i].apply(v);
    out.set_column(c, v);
  }
  return out;
}

template <class... Ts>
LinearMap compose(const Op& first, const Ts&... rest) {
  return compose_ops(std::vector<Op>{first, Op(rest)...});
}

/// Materialized tensor product of maps (or identities of spaces).
template <class... Ts>
LinearMap tensor_map(const Ts&... parts) {
  Op op = tensor_op(parts...);
  return compose_ops({op});
}

/// Materialized block permutation.
inline LinearMap permutation(std::vector<BasedSpace> blocks, std::vector<std::size_t> order) {
  return compose_ops({Op::permutation(std::move(blocks), std::move(order))});
}

/// The symmetric flip X⊗Y → Y⊗X.
inline LinearMap flip(const BasedSpace& x, const BasedSpace& y) { return permutation({x, y}, {1, 0}); }

/// Canonical isomorphism between spaces that differ only by unit factors or atom identity
/// (same dimension); used to identify 𝟙^{⊗n} with 𝟙 and equalizer spaces with known spaces.
inline LinearMap relabel(const LinearMap& m, const BasedSpace& source, const BasedSpace& target) {
  return m.retyped(source, target);
}

inline Scalar apply_scalar(const LinearMap& m) {
  if (m.source().dim() != 1 || m.target().dim() != 1) fail(ErrorKind::ShapeMismatch, "not a scalar map");
  return m.entry(0, 0);
}

// ---------------------------------------------------------------------------
// Exact dense linear algebra.

using DenseMatrix = std::vector<std::vector<Scalar>>;

struct EchelonForm {
  DenseMatrix m;                    // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss–Jordan elimination (first nonzero pivot).
inline EchelonForm rref(DenseMatrix m, std::size_t ncols_to_reduce) {
  EchelonForm out;
  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols_to_reduce && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r])
      if (!x.is_zero()) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k)
        if (!m[r][k].is_zero()) m[i][k] -= factor * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

inline std::size_t rank(const LinearMap& f) { return rref(f.dense(), f.source().dim()).pivots.size(); }

/// Kernel basis read off the reduced echelon form: one vector per free column,
/// with a 1 in that column.
inline std::vector<SparseVec> kernel_basis(const LinearMap& f) {
  const std::size_t n = f.source().dim();
  EchelonForm e = rref(f.dense(), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<SparseVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    SparseVec v;
    for (std::size_t row = 0; row < e.pivots.size(); ++row) {
      const Scalar& coeff = e.m[row][free];
      if (!coeff.is_zero()) v.emplace_back(e.pivots[row], -coeff);
    }
    v.emplace_back(free, Scalar::one(f.field()));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Equalizer {
  BasedSpace space;
  LinearMap iota;
};

/// Equalizer of f, g: X → Y, i.e. the inclusion of ker(f − g) with its echelon kernel basis.
/// Basis vectors are labelled by the label of their free coordinate.
inline Equalizer equalizer(const LinearMap& f, const LinearMap& g, const std::string& name) {
  if (f.source() != g.source() || f.target() != g.target())
    fail(ErrorKind::ShapeMismatch, "equalizer of " + f.signature() + " and " + g.signature());
  if (f == g) {
    // Keep the source itself so that equal maps have the identity as equalizer.
    return {f.source(), LinearMap::identity(f.source())};
  }
  auto basis = kernel_basis(f - g);
  std::vector<std::string> labels;
  for (const auto& v : basis) labels.push_back(f.source().label(v.back().first));
  // the free coordinate is the largest index in each echelon kernel vector
  BasedSpace e = basis.empty() ? BasedSpace::atom(f.field(), name, {}) : BasedSpace::atom(f.field(), name, labels);
  LinearMap iota(e, f.source());
  for (std::size_t k = 0; k < basis.size(); ++k) iota.set_column(k, basis[k]);
  return {e, iota};
}

struct Solution {
  LinearMap x;
  bool unique;
};

/// Solves a ∘ x = b exactly. Free variables are set to zero.
inline Solution solve_linear(const LinearMap& a, const LinearMap& b) {
  if (a.target() != b.target()) fail(ErrorKind::ShapeMismatch, "solve: targets differ");
  const std::size_t n = a.source().dim(), q = b.source().dim(), m = a.target().dim();
  DenseMatrix aug(m, std::vector<Scalar>(n + q, Scalar::zero(a.field())));
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [r, v] : a.column(c)) aug[r][c] = v;
  for (std::size_t c = 0; c < q; ++c)
    for (const auto& [r, v] : b.column(c)) aug[r][n + c] = v;
  EchelonForm e = rref(std::move(aug), n);
  const std::size_t rk = e.pivots.size();
  for (std::size_t row = rk; row < m; ++row)
    for (std::size_t c = n; c < n + q; ++c)
      if (!e.m[row][c].is_zero()) fail(ErrorKind::NoSolution, "inconsistent linear system");
  LinearMap x(b.source(), a.source());
  for (std::size_t row = 0; row < rk; ++row)
    for (std::size_t c = 0; c < q; ++c)
      if (!e.m[row][n + c].is_zero()) x.set(e.pivots[row], c, e.m[row][n + c]);
  return {x, rk == n};
}

/// Two-sided matrix inverse; NotInvertible when singular or non-square.
inline LinearMap inverse(const LinearMap& f) {
  if (f.source().dim() != f.target().dim()) fail(ErrorKind::NotInvertible, "non-square map " + f.signature());
  Solution s = [&] {
    try {
      return solve_linear(f, LinearMap::identity(f.target()));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoSolution) fail(ErrorKind::NotInvertible, "singular map " + f.signature());
      throw;
    }
  }();
  if (!s.unique) fail(ErrorKind::NotInvertible, "singular map " + f.signature());
  return s.x;
}

/// The unique ψ with ι ∘ ψ = φ for an injective ι; FactorizationFailure otherwise.
inline LinearMap factor_through(const LinearMap& iota, const LinearMap& phi) {
  try {
    Solution s = solve_linear(iota, phi);
    if (!s.unique) fail(ErrorKind::FactorizationFailure, "inclusion is not injective");
    return s.x;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoSolution)
      fail(ErrorKind::FactorizationFailure, "map " + phi.signature() + " does not land in the image of the inclusion");
    throw;
  }
}

}  // namespace hopfcleft
