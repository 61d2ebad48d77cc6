#pragma once

/**
 * @file scalar.hpp
 * @brief Exact field arithmetic over Q, prime fields F_p and cyclotomic fields Q(zeta_n).
 *
 * A `Field` is an interned handle, so equality is pointer equality and copying is free.
 * A `Scalar` carries its field and is always kept in canonical form:
 *
 * - rationals as reduced fractions,
 * - prime-field elements as residues in [0, p),
 * - cyclotomic elements as coefficient vectors of length phi(n), reduced modulo the
 *   n-th cyclotomic polynomial.
 *
 * Two scalars are equal iff their canonical forms coincide.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hopfcleft/error.hpp"

namespace hopfcleft {

enum class FieldKind : std::uint8_t { Rationals, Prime, Cyclotomic };

namespace detail {

struct FieldData {
  FieldKind kind;
  std::int64_t param;                 // p for Prime, n for Cyclotomic, 0 for Rationals
  std::vector<mpq_class> cyclo_mod;   // monic Phi_n, low degree first (Cyclotomic only)
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Exact division of integer polynomials by a monic divisor.
inline std::vector<mpq_class> poly_div_exact(std::vector<mpq_class> num, const std::vector<mpq_class>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<mpq_class> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpq_class c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  return quot;
}

inline std::vector<mpq_class> cyclotomic_polynomial(std::int64_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<mpq_class> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) poly = poly_div_exact(poly, cyclotomic_polynomial(d));
  return poly;
}

class FieldRegistry {
 public:
  static const FieldData* get(FieldKind kind, std::int64_t param) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::int64_t>, std::unique_ptr<FieldData>> table;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(static_cast<int>(kind), param);
    auto it = table.find(key);
    if (it != table.end()) return it->second.get();
    auto data = std::make_unique<FieldData>();
    data->kind = kind;
    data->param = param;
    if (kind == FieldKind::Cyclotomic) data->cyclo_mod = cyclotomic_polynomial(param);
    const FieldData* raw = data.get();
    table.emplace(key, std::move(data));
    return raw;
  }
};

}  // namespace detail

class Field {
 public:
  static Field rationals() { return Field(detail::FieldRegistry::get(FieldKind::Rationals, 0)); }

  static Field prime(std::int64_t p) {
    if (!detail::is_prime(p) || p > (std::int64_t{1} << 31))
      fail(ErrorKind::ValidationError, "prime field requires a prime p < 2^31, got " + std::to_string(p));
    return Field(detail::FieldRegistry::get(FieldKind::Prime, p));
  }

  static Field cyclotomic(std::int64_t n) {
    if (n < 1) fail(ErrorKind::ValidationError, "cyclotomic field requires n >= 1");
    return Field(detail::FieldRegistry::get(FieldKind::Cyclotomic, n));
  }

  /// Accepts "Q", "F5", "F_5", "GF(5)", "Q(zeta4)", "Q(zeta_4)".
  static Field parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t' && c != '_') s.push_back(c);
    auto as_int = [&](std::string_view digits) -> std::int64_t {
      if (digits.empty() || digits.size() > 12) fail(ErrorKind::ParseError, "bad field '" + std::string(text) + "'");
      std::int64_t v = 0;
      for (char c : digits) {
        if (c < '0' || c > '9') fail(ErrorKind::ParseError, "bad field '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
      }
      return v;
    };
    if (s == "Q") return rationals();
    if (s.size() > 1 && s[0] == 'F') return prime(as_int(std::string_view(s).substr(1)));
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') return prime(as_int(std::string_view(s).substr(3, s.size() - 4)));
    if (s.rfind("Q(zeta", 0) == 0 && s.back() == ')') return cyclotomic(as_int(std::string_view(s).substr(6, s.size() - 7)));
    fail(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
  }

  FieldKind kind() const { return data_->kind; }
  std::int64_t modulus() const { return data_->param; }
  /// Degree over Q of the cyclotomic field (1 for other kinds).
  std::size_t degree() const { return kind() == FieldKind::Cyclotomic ? data_->cyclo_mod.size() - 1 : 1; }
  const std::vector<mpq_class>& cyclotomic_modulus() const { return data_->cyclo_mod; }
  bool is_finite() const { return kind() == FieldKind::Prime; }

  std::string name() const {
    switch (kind()) {
      case FieldKind::Rationals: return "Q";
      case FieldKind::Prime: return "F" + std::to_string(modulus());
      case FieldKind::Cyclotomic: return "Q(zeta" + std::to_string(modulus()) + ")";
    }
    return "?";
  }

  bool operator==(const Field& o) const { return data_ == o.data_; }
  bool operator!=(const Field& o) const { return data_ != o.data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
};

class Scalar {
 public:
  using Poly = std::vector<mpq_class>;

  Scalar() : Scalar(Field::rationals(), 0) {}

  Scalar(Field f, std::int64_t v) : field_(f) {
    switch (f.kind()) {
      case FieldKind::Prime: rep_ = reduce_mod(v, f.modulus()); break;
      case FieldKind::Rationals: rep_ = mpq_class(static_cast<long>(v)); break;
      case FieldKind::Cyclotomic: {
        Poly p(f.degree(), 0);
        p[0] = static_cast<long>(v);
        rep_ = std::move(p);
        break;
      }
    }
  }

  Scalar(Field f, mpq_class q) : field_(f) {
    q.canonicalize();
    switch (f.kind()) {
      case FieldKind::Prime: {
        const std::int64_t p = f.modulus();
        mpz_class num = q.get_num() % p;
        mpz_class den = q.get_den() % p;
        if (den == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes in " + f.name());
        std::int64_t n = reduce_mod(num.get_si(), p);
        rep_ = mul_mod(n, inv_mod(reduce_mod(den.get_si(), p), p), p);
        break;
      }
      case FieldKind::Rationals: rep_ = std::move(q); break;
      case FieldKind::Cyclotomic: {
        Poly p(f.degree(), 0);
        p[0] = std::move(q);
        rep_ = std::move(p);
        break;
      }
    }
  }

  /// Cyclotomic element from polynomial coefficients (any length; reduced modulo Phi_n).
  static Scalar from_poly(Field f, Poly coeffs) {
    if (f.kind() != FieldKind::Cyclotomic) {
      Scalar acc = zero(f);
      if (!coeffs.empty()) acc = Scalar(f, coeffs[0]);
      for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) fail(ErrorKind::ValidationError, "polynomial value outside a cyclotomic field");
      return acc;
    }
    for (auto& c : coeffs) c.canonicalize();
    Scalar s(f, 0);
    s.rep_ = reduce_poly(std::move(coeffs), f);
    return s;
  }

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  /// The generator zeta_n of Q(zeta_n).
  static Scalar zeta(Field f) {
    if (f.kind() != FieldKind::Cyclotomic) fail(ErrorKind::NoSuchRoot, "zeta requires a cyclotomic field");
    Poly p(2, 0);
    p[1] = 1;
    return from_poly(f, std::move(p));
  }

  const Field& field() const { return field_; }

  bool is_zero() const {
    switch (rep_.index()) {
      case 0: return std::get<0>(rep_) == 0;
      case 1: return std::get<1>(rep_) == 0;
      default:
        for (const auto& c : std::get<2>(rep_))
          if (c != 0) return false;
        return true;
    }
  }

  bool is_one() const { return *this == one(field_); }

  Scalar operator+(const Scalar& o) const {
    check_field(o);
    Scalar r(*this);
    r += o;
    return r;
  }
  Scalar operator-(const Scalar& o) const {
    check_field(o);
    Scalar r(*this);
    r -= o;
    return r;
  }
  Scalar operator-() const { return zero(field_) - *this; }

  Scalar& operator+=(const Scalar& o) {
    check_field(o);
    switch (rep_.index()) {
      case 0: {
        std::int64_t s = std::get<0>(rep_) + std::get<0>(o.rep_);
        const std::int64_t p = field_.modulus();
        std::get<0>(rep_) = s >= p ? s - p : s;
        break;
      }
      case 1: std::get<1>(rep_) += std::get<1>(o.rep_); break;
      default: {
        auto& a = std::get<2>(rep_);
        const auto& b = std::get<2>(o.rep_);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      }
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    check_field(o);
    switch (rep_.index()) {
      case 0: {
        std::int64_t s = std::get<0>(rep_) - std::get<0>(o.rep_);
        std::get<0>(rep_) = s < 0 ? s + field_.modulus() : s;
        break;
      }
      case 1: std::get<1>(rep_) -= std::get<1>(o.rep_); break;
      default: {
        auto& a = std::get<2>(rep_);
        const auto& b = std::get<2>(o.rep_);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
      }
    }
    return *this;
  }

  Scalar operator*(const Scalar& o) const {
    check_field(o);
    Scalar r(field_, 0);
    switch (rep_.index()) {
      case 0: r.rep_ = mul_mod(std::get<0>(rep_), std::get<0>(o.rep_), field_.modulus()); break;
      case 1: r.rep_ = mpq_class(std::get<1>(rep_) * std::get<1>(o.rep_)); break;
      default: {
        const auto& a = std::get<2>(rep_);
        const auto& b = std::get<2>(o.rep_);
        Poly prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] == 0) continue;
          for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
        }
        r.rep_ = reduce_poly(std::move(prod), field_);
      }
    }
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + field_.name());
    Scalar r(field_, 0);
    switch (rep_.index()) {
      case 0: r.rep_ = inv_mod(std::get<0>(rep_), field_.modulus()); break;
      case 1: r.rep_ = mpq_class(1 / std::get<1>(rep_)); break;
      default: r.rep_ = cyclotomic_inverse(); break;
    }
    return r;
  }

  Scalar operator/(const Scalar& o) const {
    check_field(o);
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in " + field_.name());
    return *this * o.inverse();
  }

  Scalar pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = one(field_), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  bool operator==(const Scalar& o) const { return field_ == o.field_ && rep_ == o.rep_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Residue in [0, p) for prime-field elements.
  std::int64_t residue() const {
    if (rep_.index() != 0) fail(ErrorKind::FieldMismatch, "residue of a non prime-field element");
    return std::get<0>(rep_);
  }

  /// Canonical text: "a/b" or "a" over Q, residues over F_p, "[c0, c1, ...]" over Q(zeta_n).
  std::string to_string() const {
    switch (rep_.index()) {
      case 0: return std::to_string(std::get<0>(rep_));
      case 1: return std::get<1>(rep_).get_str();
      default: {
        std::string s = "[";
        const auto& a = std::get<2>(rep_);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (i) s += ", ";
          s += a[i].get_str();
        }
        return s + "]";
      }
    }
  }

  /// Parses the canonical text. Integers and fractions are accepted in every field
  /// (fractions are inverted in F_p); lists only in cyclotomic fields.
  static Scalar parse(Field f, std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) fail(ErrorKind::ParseError, "empty scalar");
    if (s.front() == '[') {
      if (s.back() != ']') fail(ErrorKind::ParseError, "unterminated coefficient list '" + s + "'");
      Poly coeffs;
      std::string body = s.substr(1, s.size() - 2);
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        coeffs.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (f.kind() != FieldKind::Cyclotomic && coeffs.size() > 1)
        fail(ErrorKind::ParseError, "coefficient list '" + s + "' outside a cyclotomic field");
      return from_poly(f, std::move(coeffs));
    }
    return Scalar(f, parse_rational(s));
  }

 private:
  using Rep = std::variant<std::int64_t, mpq_class, Poly>;

  static mpq_class parse_rational(const std::string& tok) {
    if (tok.empty()) fail(ErrorKind::ParseError, "empty number");
    for (std::size_t i = 0; i < tok.size(); ++i) {
      char c = tok[i];
      bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && (i == 0 || tok[i - 1] == '/'));
      if (!ok) fail(ErrorKind::ParseError, "bad number '" + tok + "'");
    }
    std::string t = tok[0] == '+' ? tok.substr(1) : tok;
    mpq_class q;
    if (q.set_str(t, 10) != 0) fail(ErrorKind::ParseError, "bad number '" + tok + "'");
    if (q.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + tok + "'");
    q.canonicalize();
    return q;
  }

  void check_field(const Scalar& o) const {
    if (field_ != o.field_) fail(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
  }

  static std::int64_t reduce_mod(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
  }
  static std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }
  static std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero mod " + std::to_string(p));
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return reduce_mod(t, p);
  }

  static Poly reduce_poly(Poly p, const Field& f) {
    const auto& m = f.cyclotomic_modulus();
    const std::size_t d = m.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
      if (p[k] == 0) continue;
      mpq_class c = p[k];
      for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * m[i];
    }
    p.resize(d, 0);
    return p;
  }

  // Solves x * a = 1 through the multiplication-by-a matrix.
  Poly cyclotomic_inverse() const {
    const auto& a = std::get<2>(rep_);
    const std::size_t d = a.size();
    // column j of M = a * zeta^j
    std::vector<Poly> cols;
    Poly basis(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
      Poly shifted(j + d, 0);
      for (std::size_t i = 0; i < d; ++i) shifted[i + j] = a[i];
      cols.push_back(reduce_poly(std::move(shifted), field_));
    }
    std::vector<std::vector<mpq_class>> aug(d, std::vector<mpq_class>(d + 1, 0));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) aug[r][c] = cols[c][r];
      aug[r][d] = r == 0 ? 1 : 0;
    }
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (piv < d && aug[piv][c] == 0) ++piv;
      if (piv == d) fail(ErrorKind::DivisionByZero, "singular cyclotomic element");
      std::swap(aug[piv], aug[c]);
      mpq_class inv = 1 / aug[c][c];
      for (auto& x : aug[c]) x *= inv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || aug[r][c] == 0) continue;
        mpq_class factor = aug[r][c];
        for (std::size_t k = c; k <= d; ++k) aug[r][k] -= factor * aug[c][k];
      }
    }
    Poly x(d);
    for (std::size_t r = 0; r < d; ++r) x[r] = aug[r][d];
    return x;
  }

  Field field_;
  Rep rep_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

/// A primitive n-th root of unity in `f`, or NoSuchRoot.
/// Over F_p the smallest residue of exact order n is returned, so results are deterministic.
inline Scalar root_of_unity(Field f, std::int64_t n) {
  if (n < 1) fail(ErrorKind::NoSuchRoot, "order must be positive");
  auto has_order = [n](const Scalar& z) {
    if (!z.pow(n).is_one()) return false;
    for (std::int64_t k = 1; k < n; ++k)
      if (z.pow(k).is_one()) return false;
    return true;
  };
  switch (f.kind()) {
    case FieldKind::Rationals:
      if (n == 1) return Scalar::one(f);
      if (n == 2) return Scalar(f, -1);
      break;
    case FieldKind::Prime: {
      const std::int64_t p = f.modulus();
      if ((p - 1) % n != 0) break;
      for (std::int64_t a = 1; a < p; ++a) {
        Scalar z(f, a);
        if (has_order(z)) return z;
      }
      break;
    }
    case FieldKind::Cyclotomic: {
      const std::int64_t m = f.modulus();
      if (m % n == 0) return Scalar::zeta(f).pow(m / n);
      // Q(zeta_m) = Q(zeta_2m) for odd m, with zeta_2m = -zeta_m^((m+1)/2).
      if (m % 2 == 1 && (2 * m) % n == 0) {
        Scalar z2m = -Scalar::zeta(f).pow((m + 1) / 2);
        return z2m.pow(2 * m / n);
      }
      break;
    }
  }
  fail(ErrorKind::NoSuchRoot, f.name() + " has no primitive " + std::to_string(n) + "-th root of unity");
}

}  // namespace hopfcleft
