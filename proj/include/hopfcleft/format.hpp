#pragma once

/**
 * @file format.hpp
 * @brief Line-oriented definition files and their resolution into algebraic objects.
 *
 * Grammar (one statement per line, `#` starts a comment):
 *
 *     field: F5
 *     space K: 1 g g2 g3
 *     grade R: 1=0 x=1
 *     tensor mul_K mul: K K -> K
 *       (g2 ; g g ; 1)
 *     role hopf_algebra K: space=K mul=mul_K unit=unit_K comul=comul_K counit=counit_K
 *
 * A tensor header lists source and target spaces by name, `1` for the unit. Each entry
 * gives target labels, source labels and a value; labels of the unit space are left
 * empty. Unlisted entries are zero.
 */

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopfcleft/fixtures.hpp"

namespace hopfcleft {

/// Tags a tensor may carry; they state how the map is meant to be used.
inline const std::set<std::string>& tensor_tags() {
  static const std::set<std::string> tags{"map",    "mul",         "unit",          "comul",          "counit",
                                          "antipode", "left_action", "left_coaction", "right_coaction", "measuring",
                                          "cocycle",  "section"};
  return tags;
}

/// Role kinds and their keys; keys in brackets are optional.
inline const std::map<std::string, std::vector<std::string>>& role_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"hopf_algebra", {"space", "mul", "unit", "comul", "counit", "[antipode]"}},
      {"bialgebra", {"space", "mul", "unit", "comul", "counit"}},
      {"module", {"space", "base", "action"}},
      {"yd_module", {"space", "base", "action", "coaction"}},
      {"yd_hopf", {"module", "mul", "unit", "comul", "counit", "[antipode]"}},
      {"graded_yd_hopf", {"hopf"}},
      {"algebra", {"module", "mul", "unit"}},
      {"measuring", {"hopf", "algebra", "nu"}},
      {"cocycle", {"measuring", "sigma"}},
      {"comodule_algebra", {"hopf", "algebra", "coaction"}},
      {"cleft_extension", {"comodule", "section"}},
  };
  return keys;
}

struct TensorDecl {
  std::string tag;
  std::vector<std::string> source, target;  // space names; empty = unit
  LinearMap map;
};

struct RoleDecl {
  std::string kind;
  std::string name;
  std::map<std::string, std::string> keys;
};

struct DefinitionFile {
  Field field = Field::rationals();
  bool has_field = false;
  std::vector<std::string> space_order;
  std::map<std::string, BasedSpace> spaces;
  std::map<std::string, std::vector<int>> grades;
  std::vector<std::string> tensor_order;
  std::map<std::string, TensorDecl> tensors;
  std::vector<RoleDecl> roles;

  const RoleDecl* role(const std::string& name) const {
    for (const auto& r : roles)
      if (r.name == name) return &r;
    return nullptr;
  }

  /// Names of roles of the given kind in declaration order.
  std::vector<std::string> roles_of(const std::string& kind) const {
    std::vector<std::string> out;
    for (const auto& r : roles)
      if (r.kind == kind) out.push_back(r.name);
    return out;
  }

  BasedSpace space_of(const std::vector<std::string>& names) const {
    BasedSpace s = BasedSpace::unit(field);
    for (const auto& n : names) {
      auto it = spaces.find(n);
      if (it == spaces.end()) fail(ErrorKind::ValidationError, "unknown space '" + n + "'");
      s = tensor(s, it->second);
    }
    return s;
  }

  const LinearMap& tensor_named(const std::string& name) const {
    auto it = tensors.find(name);
    if (it == tensors.end()) fail(ErrorKind::ValidationError, "unknown tensor '" + name + "'");
    return it->second.map;
  }

  // Builders used when writing results.

  void add_space(const std::string& name, const BasedSpace& s) {
    if (spaces.count(name)) return;
    space_order.push_back(name);
    spaces.emplace(name, s);
  }

  /// Declares an atom space whose labels are those of `s`, returning it.
  BasedSpace add_flat_space(const std::string& name, const BasedSpace& s) {
    if (s.atoms().size() == 1 && s.atoms()[0]->name == name) {
      add_space(name, s);
      return s;
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s.dim(); ++i) labels.push_back(s.label(i));
    BasedSpace flat = BasedSpace::atom(field, name, labels);
    add_space(name, flat);
    return spaces.at(name);
  }

  /// Adds a tensor whose source and target are tensor products of declared atom spaces.
  void add_tensor(const std::string& name, const std::string& tag, const LinearMap& m) {
    auto names = [&](const BasedSpace& s) {
      std::vector<std::string> out;
      for (const auto& a : s.atoms()) {
        auto it = spaces.find(a->name);
        if (it == spaces.end() || it->second.atoms().size() != 1 || it->second.atoms()[0]->labels != a->labels)
          fail(ErrorKind::ValidationError, "space '" + a->name + "' is not declared for tensor " + name);
        out.push_back(a->name);
      }
      return out;
    };
    if (!tensors.count(name)) tensor_order.push_back(name);
    tensors.insert_or_assign(name, TensorDecl{tag, names(m.source()), names(m.target()), m});
  }

  void add_role(const std::string& kind, const std::string& name, std::map<std::string, std::string> keys) {
    roles.push_back({kind, name, std::move(keys)});
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || s == "1") return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_' || c == '-' || c == '.'; });
}

class Parser {
 public:
  Parser(DefinitionFile& d, std::optional<Field> override_field) : d_(d), override_(override_field) {}

  void run(const std::string& text, const std::string& origin) {
    origin_ = origin;
    std::istringstream in(text);
    std::string raw;
    line_ = 0;
    open_tensor_.clear();
    while (std::getline(in, raw)) {
      ++line_;
      std::string s = raw.substr(0, raw.find('#'));
      std::size_t col = s.find_first_not_of(" \t\r");
      s = trim(s);
      if (s.empty()) continue;
      col_ = col == std::string::npos ? 1 : col + 1;
      statement(s);
    }
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, origin_ + ":" + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what);
  }

  [[noreturn]] void invalid(const std::string& what) const {
    fail(ErrorKind::ValidationError, origin_ + ":" + std::to_string(line_) + ": " + what);
  }

  std::pair<std::string, std::string> split_colon(const std::string& s) const {
    std::size_t c = s.find(':');
    if (c == std::string::npos) error("expected ':'");
    return {trim(s.substr(0, c)), trim(s.substr(c + 1))};
  }

  void need_field() const {
    if (!d_.has_field) error("'field:' must come first");
  }

  void statement(const std::string& s) {
    if (s.front() == '(') return entry(s);
    open_tensor_.clear();
    auto head = words(s.substr(0, s.find(':')));
    if (head.empty()) error("empty statement");
    const std::string& kw = head[0];
    if (kw == "field") return field_line(s);
    need_field();
    if (kw == "space") return space_line(s);
    if (kw == "grade") return grade_line(s);
    if (kw == "tensor") return tensor_line(s);
    if (kw == "role") return role_line(s);
    error("unknown statement '" + kw + "'");
  }

  void field_line(const std::string& s) {
    auto [head, rest] = split_colon(s);
    if (head != "field") error("malformed field line");
    Field f = [&] {
      try {
        return Field::parse(rest);
      } catch (const Error& e) {
        error(e.what());
      }
    }();
    if (override_) f = *override_;
    if (d_.has_field && d_.field != f) invalid("files declare different fields");
    d_.field = f;
    d_.has_field = true;
  }

  void space_line(const std::string& s) {
    auto [head, rest] = split_colon(s);
    auto h = words(head);
    if (h.size() != 2 || !valid_name(h[1])) error("expected 'space NAME: labels...'");
    auto labels = words(rest);
    if (labels.empty()) invalid("space " + h[1] + " has no basis");
    BasedSpace sp = [&] {
      try {
        return BasedSpace::atom(d_.field, h[1], labels);
      } catch (const Error& e) {
        invalid(e.what());
      }
    }();
    auto it = d_.spaces.find(h[1]);
    if (it != d_.spaces.end()) {
      if (it->second.atoms()[0]->labels != labels) invalid("space " + h[1] + " redeclared with other labels");
      return;
    }
    d_.add_space(h[1], sp);
  }

  void grade_line(const std::string& s) {
    auto [head, rest] = split_colon(s);
    auto h = words(head);
    if (h.size() != 2) error("expected 'grade SPACE: label=k ...'");
    auto it = d_.spaces.find(h[1]);
    if (it == d_.spaces.end()) invalid("grade for unknown space " + h[1]);
    const auto& labels = it->second.atoms()[0]->labels;
    std::vector<int> deg(labels.size(), -1);
    for (const auto& w : words(rest)) {
      std::size_t eq = w.find('=');
      if (eq == std::string::npos) error("expected label=degree, got '" + w + "'");
      std::string lab = w.substr(0, eq);
      auto li = std::find(labels.begin(), labels.end(), lab);
      if (li == labels.end()) invalid("unknown basis label '" + lab + "' in grade " + h[1]);
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(w.substr(eq + 1), &used);
        if (used != w.size() - eq - 1 || k < 0) throw std::invalid_argument("x");
      } catch (const std::exception&) {
        error("degree must be a non-negative integer in '" + w + "'");
      }
      deg[static_cast<std::size_t>(li - labels.begin())] = k;
    }
    for (std::size_t i = 0; i < deg.size(); ++i)
      if (deg[i] < 0) invalid("label '" + labels[i] + "' of " + h[1] + " has no degree");
    d_.grades[h[1]] = deg;
  }

  void tensor_line(const std::string& s) {
    auto [head, rest] = split_colon(s);
    auto h = words(head);
    if (h.size() != 3 || !valid_name(h[1])) error("expected 'tensor NAME TAG: SOURCE -> TARGET'");
    if (!tensor_tags().count(h[2])) invalid("unknown tensor tag '" + h[2] + "'");
    std::size_t arrow = rest.find("->");
    if (arrow == std::string::npos) error("expected '->' in tensor header");
    auto side = [&](const std::string& t) {
      auto w = words(t);
      if (w.empty()) error("empty side in tensor header (write 1 for the unit)");
      if (w.size() == 1 && w[0] == "1") return std::vector<std::string>{};
      for (const auto& n : w)
        if (!d_.spaces.count(n)) invalid("tensor " + h[1] + " uses unknown space '" + n + "'");
      return w;
    };
    auto src = side(rest.substr(0, arrow));
    auto tgt = side(rest.substr(arrow + 2));
    if (d_.tensors.count(h[1])) invalid("tensor " + h[1] + " declared twice");
    TensorDecl t{h[2], src, tgt, LinearMap(d_.space_of(src), d_.space_of(tgt))};
    d_.tensor_order.push_back(h[1]);
    d_.tensors.emplace(h[1], std::move(t));
    open_tensor_ = h[1];
  }

  void entry(const std::string& s) {
    if (open_tensor_.empty()) error("entry outside a tensor block");
    if (s.back() != ')') error("entry must end with ')'");
    std::string body = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i)
      if (i == body.size() || body[i] == ';') {
        parts.push_back(trim(body.substr(start, i - start)));
        start = i + 1;
      }
    if (parts.size() != 3) error("entry needs '(target labels ; source labels ; value)'");
    TensorDecl& t = d_.tensors.at(open_tensor_);
    auto locate = [&](const BasedSpace& sp, const std::string& text, const char* side) {
      auto w = words(text);
      auto idx = sp.index_of(w);
      if (!idx) invalid("unknown basis label tuple '" + text + "' on the " + side + " of tensor " + open_tensor_);
      return *idx;
    };
    std::size_t r = locate(t.map.target(), parts[0], "target");
    std::size_t c = locate(t.map.source(), parts[1], "source");
    Scalar v = [&] {
      try {
        return Scalar::parse(d_.field, parts[2]);
      } catch (const Error& e) {
        error(std::string("bad value: ") + e.what());
      }
    }();
    t.map.add_to(r, c, v);
  }

  void role_line(const std::string& s) {
    auto [head, rest] = split_colon(s);
    auto h = words(head);
    if (h.size() != 3 || !valid_name(h[2])) error("expected 'role KIND NAME: key=value ...'");
    auto kit = role_keys().find(h[1]);
    if (kit == role_keys().end()) invalid("unknown role kind '" + h[1] + "'");
    if (d_.role(h[2])) invalid("role " + h[2] + " declared twice");
    RoleDecl r{h[1], h[2], {}};
    for (const auto& w : words(rest)) {
      std::size_t eq = w.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == w.size()) error("expected key=value, got '" + w + "'");
      std::string k = w.substr(0, eq);
      bool known = false;
      for (const auto& key : kit->second)
        if (key == k || key == "[" + k + "]") known = true;
      if (!known) invalid("role " + h[1] + " has no key '" + k + "'");
      if (r.keys.count(k)) invalid("key '" + k + "' repeated");
      r.keys[k] = w.substr(eq + 1);
    }
    for (const auto& key : kit->second)
      if (key.front() != '[' && !r.keys.count(key)) invalid("role " + h[1] + " " + h[2] + " is missing '" + key + "'");
    d_.roles.push_back(std::move(r));
  }

  DefinitionFile& d_;
  std::optional<Field> override_;
  std::string origin_;
  std::string open_tensor_;
  std::size_t line_ = 0, col_ = 1;
};

}  // namespace detail

/// Parses and merges several texts (given as (origin, text) pairs) into one definition.
inline DefinitionFile parse_definitions(const std::vector<std::pair<std::string, std::string>>& texts,
                                        std::optional<Field> field_override = std::nullopt) {
  DefinitionFile d;
  if (field_override) {
    d.field = *field_override;
  }
  detail::Parser p(d, field_override);
  for (const auto& [origin, text] : texts) p.run(text, origin);
  if (!d.has_field) fail(ErrorKind::ParseError, "no 'field:' line");
  return d;
}

inline DefinitionFile parse_definition(const std::string& text, std::optional<Field> field_override = std::nullopt) {
  return parse_definitions({{"<input>", text}}, field_override);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Canonical text: declarations in order, entries sorted by (source, target) index.
inline std::string serialize(const DefinitionFile& d) {
  std::ostringstream o;
  o << "field: " << d.field.name() << "\n";
  if (!d.space_order.empty()) o << "\n";
  for (const auto& n : d.space_order) {
    o << "space " << n << ":";
    for (const auto& l : d.spaces.at(n).atoms()[0]->labels) o << " " << l;
    o << "\n";
  }
  for (const auto& n : d.space_order) {
    auto g = d.grades.find(n);
    if (g == d.grades.end()) continue;
    o << "grade " << n << ":";
    const auto& labels = d.spaces.at(n).atoms()[0]->labels;
    for (std::size_t i = 0; i < labels.size(); ++i) o << " " << labels[i] << "=" << g->second[i];
    o << "\n";
  }
  auto side = [](const std::vector<std::string>& names) {
    if (names.empty()) return std::string("1");
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? " " : "") + names[i];
    return s;
  };
  auto tuple = [](const BasedSpace& s, std::size_t i) {
    std::string out;
    auto t = s.label_tuple(i);
    if (s.is_unit()) return out;
    for (std::size_t k = 0; k < t.size(); ++k) out += (k ? " " : "") + t[k];
    return out;
  };
  for (const auto& n : d.tensor_order) {
    const TensorDecl& t = d.tensors.at(n);
    o << "\ntensor " << n << " " << t.tag << ": " << side(t.source) << " -> " << side(t.target) << "\n";
    for (std::size_t c = 0; c < t.map.source().dim(); ++c)
      for (const auto& [r, v] : t.map.column(c))
      {
        const std::string a = tuple(t.map.target(), r), b = tuple(t.map.source(), c);
        o << "  (" << (a.empty() ? " " : a + " ") << "; " << (b.empty() ? "" : b + " ") << "; " << v.to_string() << ")\n";
      }
  }
  if (!d.roles.empty()) o << "\n";
  for (const auto& r : d.roles) {
    o << "role " << r.kind << " " << r.name << ":";
    for (const auto& [k, v] : r.keys) o << " " << k << "=" << v;
    o << "\n";
  }
  return o.str();
}

/// Resolves role declarations into objects, caching shared ambients so that objects
/// over the same Hopf algebra share one base pointer.
class Model {
 public:
  explicit Model(DefinitionFile d) : d_(std::move(d)) {}

  const DefinitionFile& file() const { return d_; }

  const RoleDecl& role(const std::string& name, std::initializer_list<const char*> kinds) const {
    const RoleDecl* r = d_.role(name);
    if (!r) fail(ErrorKind::ValidationError, "unknown role '" + name + "'");
    for (const char* k : kinds)
      if (r->kind == k) return *r;
    std::string want;
    for (const char* k : kinds) want += std::string(want.empty() ? "" : " or ") + k;
    fail(ErrorKind::ValidationError, "role " + name + " is a " + r->kind + ", expected " + want);
  }

  /// The single role of one of the given kinds, or the one named `preferred`.
  std::string pick(std::initializer_list<const char*> kinds, const std::string& preferred = {}) const {
    if (!preferred.empty()) {
      role(preferred, kinds);
      return preferred;
    }
    std::vector<std::string> found;
    for (const auto& r : d_.roles)
      for (const char* k : kinds)
        if (r.kind == k) found.push_back(r.name);
    std::string want;
    for (const char* k : kinds) want += std::string(want.empty() ? "" : "/") + k;
    if (found.empty()) fail(ErrorKind::ValidationError, "no " + want + " role in the input");
    if (found.size() > 1) fail(ErrorKind::ValidationError, "several " + want + " roles; choose one with --object");
    return found[0];
  }

  const LinearMap& role_tensor(const RoleDecl& r, const std::string& key, const std::string& tag,
                          const BasedSpace& src, const BasedSpace& tgt) const {
    const std::string& name = r.keys.at(key);
    auto it = d_.tensors.find(name);
    if (it == d_.tensors.end()) fail(ErrorKind::ValidationError, "role " + r.name + ": unknown tensor '" + name + "'");
    const TensorDecl& t = it->second;
    if (t.tag != tag)
      fail(ErrorKind::ValidationError, "role " + r.name + ": tensor " + name + " is tagged " + t.tag + ", expected " + tag);
    if (t.map.source() != src || t.map.target() != tgt)
      fail(ErrorKind::ValidationError, "role " + r.name + ": tensor " + name + " has shape " + t.map.signature() +
                                           ", expected " + src.name() + " → " + tgt.name());
    return t.map;
  }

  BasedSpace space(const std::string& name) const { return d_.space_of({name}); }
  BasedSpace unit() const { return BasedSpace::unit(d_.field); }

  BialgebraData bialgebra(const std::string& name) const {
    const RoleDecl& r = role(name, {"hopf_algebra", "bialgebra"});
    BasedSpace s = space(r.keys.at("space"));
    BasedSpace ss = tensor(s, s);
    return {{s, role_tensor(r, "mul", "mul", ss, s), role_tensor(r, "unit", "unit", unit(), s)},
            {s, role_tensor(r, "comul", "comul", s, ss), role_tensor(r, "counit", "counit", s, unit())},
            flip(s, s)};
  }

  /// Classical Hopf algebra; a declared antipode must equal the computed one.
  HopfPtr hopf(const std::string& name) const {
    auto it = hopf_cache_.find(name);
    if (it != hopf_cache_.end()) return it->second;
    const RoleDecl& r = role(name, {"hopf_algebra"});
    HopfAlgebraData h = make_hopf(bialgebra(name));
    if (r.keys.count("antipode")) {
      const LinearMap& s = role_tensor(r, "antipode", "antipode", h.space(), h.space());
      if (s != h.antipode) fail(ErrorKind::AxiomFailure, "declared antipode of " + name + " is not the convolution inverse of id");
    }
    return hopf_cache_[name] = share(std::move(h));
  }

  HopfPtr base(const std::string& name) const {
    if (name == "1") {
      if (!trivial_) trivial_ = trivial_ambient(d_.field);
      return trivial_;
    }
    return hopf(name);
  }

  HModule module(const std::string& name) const {
    const RoleDecl& r = role(name, {"module", "yd_module"});
    HopfPtr k = base(r.keys.at("base"));
    BasedSpace s = space(r.keys.at("space"));
    return {k, s, role_tensor(r, "action", "left_action", tensor(k->space(), s), s)};
  }

  YDModule yd_module(const std::string& name) const {
    const RoleDecl& r = role(name, {"yd_module"});
    HModule m = module(name);
    return {m, role_tensor(r, "coaction", "left_coaction", m.space, tensor(m.base->space(), m.space))};
  }

  /// A yd_hopf role, or a hopf_algebra seen over the trivial ambient.
  YDHopf yd_hopf(const std::string& name) const {
    const RoleDecl& r = role(name, {"yd_hopf", "hopf_algebra"});
    if (r.kind == "hopf_algebra") {
      YDHopf h = classical(*hopf(name));
      h.obj.module.base = base("1");
      return h;
    }
    YDModule obj = yd_module(r.keys.at("module"));
    const BasedSpace& s = obj.space();
    BasedSpace ss = tensor(s, s);
    YDHopf h = make_yd_hopf(obj, role_tensor(r, "mul", "mul", ss, s), role_tensor(r, "unit", "unit", unit(), s),
                            role_tensor(r, "comul", "comul", s, ss), role_tensor(r, "counit", "counit", s, unit()));
    if (r.keys.count("antipode") && role_tensor(r, "antipode", "antipode", s, s) != h.hopf.antipode)
      fail(ErrorKind::AxiomFailure, "declared antipode of " + name + " is not the convolution inverse of id");
    return h;
  }

  GradedYDHopf graded(const std::string& name) const {
    const RoleDecl& r = role(name, {"graded_yd_hopf"});
    YDHopf h = yd_hopf(r.keys.at("hopf"));
    GradedYDHopf g{h, {}};
    const std::string& sname = h.space().atoms().at(0)->name;
    auto it = d_.grades.find(sname);
    if (it == d_.grades.end()) fail(ErrorKind::ValidationError, "no grade line for space " + sname);
    g.grading.by_atom[sname] = it->second;
    return g;
  }

  DAlgebra algebra(const std::string& name) const {
    const RoleDecl& r = role(name, {"algebra"});
    HModule m = module(r.keys.at("module"));
    BasedSpace ss = tensor(m.space, m.space);
    return {{m.space, role_tensor(r, "mul", "mul", ss, m.space), role_tensor(r, "unit", "unit", unit(), m.space)}, m};
  }

  Measuring measuring(const std::string& name) const {
    const RoleDecl& r = role(name, {"measuring"});
    YDHopf h = yd_hopf(r.keys.at("hopf"));
    if (r.keys.at("algebra") == "1") {
      Measuring m = unit_measuring(h);
      return {h, m.a, role_tensor(r, "nu", "measuring", h.space(), unit())};
    }
    DAlgebra a = algebra(r.keys.at("algebra"));
    same_base(h.base(), a.obj.base);
    a.obj.base = h.base();
    const BasedSpace& as = a.alg.space;
    return {h, a, role_tensor(r, "nu", "measuring", tensor(h.space(), as), as)};
  }

  /// The measuring and σ of a cocycle role (σ not yet verified).
  std::pair<Measuring, LinearMap> cocycle_data(const std::string& name) const {
    const RoleDecl& r = role(name, {"cocycle"});
    Measuring m = measuring(r.keys.at("measuring"));
    const BasedSpace& hs = m.h.space();
    return {m, role_tensor(r, "sigma", "cocycle", tensor(hs, hs), m.a.alg.space)};
  }

  ComoduleAlgebra comodule_algebra(const std::string& name) const {
    const RoleDecl& r = role(name, {"comodule_algebra"});
    YDHopf h = yd_hopf(r.keys.at("hopf"));
    DAlgebra b = algebra(r.keys.at("algebra"));
    same_base(h.base(), b.obj.base);
    b.obj.base = h.base();
    const BasedSpace& bs = b.alg.space;
    return {h, b, role_tensor(r, "coaction", "right_coaction", bs, tensor(bs, h.space()))};
  }

  CleftExtension cleft(const std::string& name) const {
    const RoleDecl& r = role(name, {"cleft_extension"});
    ComoduleAlgebra b = comodule_algebra(r.keys.at("comodule"));
    return make_cleft(b, role_tensor(r, "section", "section", b.h.space(), b.b.alg.space));
  }

 private:
  DefinitionFile d_;
  mutable std::map<std::string, HopfPtr> hopf_cache_;
  mutable HopfPtr trivial_;
};

// ---------------------------------------------------------------------------
// Writers for results. Composite spaces are declared as flat atom spaces whose labels
// are the joined tuples.

/// Declares `h` (flattened to one space named `name`) as a hopf_algebra role.
inline void write_hopf(DefinitionFile& d, const std::string& name, const HopfAlgebraData& h) {
  BasedSpace s = d.add_flat_space(name, h.space());
  BasedSpace ss = tensor(s, s), u = BasedSpace::unit(d.field);
  d.add_tensor("mul_" + name, "mul", relabel(h.mul(), tensor(s, s), s));
  d.add_tensor("unit_" + name, "unit", relabel(h.unit(), u, s));
  d.add_tensor("comul_" + name, "comul", relabel(h.comul(), s, ss));
  d.add_tensor("counit_" + name, "counit", relabel(h.counit(), s, u));
  d.add_tensor("antipode_" + name, "antipode", relabel(h.antipode, s, s));
  d.add_role("hopf_algebra", name,
             {{"space", name}, {"mul", "mul_" + name}, {"unit", "unit_" + name}, {"comul", "comul_" + name},
              {"counit", "counit_" + name}, {"antipode", "antipode_" + name}});
}

/// Relabels each atom of `s` to the declared space of the same name when present,
/// otherwise flattens the whole space under `fallback`.
inline BasedSpace declared_or_flat(DefinitionFile& d, const BasedSpace& s, const std::string& fallback) {
  bool all = !s.atoms().empty();
  for (const auto& a : s.atoms()) {
    auto it = d.spaces.find(a->name);
    if (it == d.spaces.end() || it->second.atoms()[0]->labels != a->labels) all = false;
  }
  if (all || s.is_unit()) return s;
  return d.add_flat_space(fallback, s);
}

/// Writes a map, flattening source/target blocks that are not declared spaces.
inline void write_map(DefinitionFile& d, const std::string& name, const std::string& tag, const LinearMap& m,
                      const std::string& src_name, const std::string& tgt_name) {
  BasedSpace src = declared_or_flat(d, m.source(), src_name);
  BasedSpace tgt = declared_or_flat(d, m.target(), tgt_name);
  d.add_tensor(name, tag, relabel(m, src, tgt));
}

}  // namespace hopfcleft
