#pragma once

/**
 * @file cli.hpp
 * @brief The hopfcleft command driver, callable in-process. Exit status: 0 when every
 * check passes, 1 when a check fails, 2 on malformed input or usage errors.
 */

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfcleft/census.hpp"
#include "hopfcleft/format.hpp"

namespace hopfcleft::cli {

struct Options {
  std::string command;
  std::vector<std::string> args;
  std::string report = "text";
  std::uint64_t bound = 1000000;
  std::string field_override;
  std::string out;
  std::string object;
  std::string sigma;
};

/// Everything a command produces.
struct Outcome {
  std::vector<Report> reports;
  std::vector<std::string> lines;  // free text, e.g. the census listing
  std::optional<DefinitionFile> result;

  bool ok() const {
    for (const auto& r : reports)
      if (!r.ok()) return false;
    return true;
  }
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"verify-hopf", "verify-yd",          "verify-measuring",  "verify-cocycle",
                                          "crossed-product", "smash",          "cleft-from-cocycle", "cocycle-from-cleft",
                                          "round-trip",  "bosonize",           "phi",               "phi-inverse",
                                          "psi",         "deform",             "gr-check",          "census",
                                          "oracle",      "convolution-inverse", "coinvariants"};
  return c;
}

inline std::string resolve_path(const std::string& p) {
  namespace fs = std::filesystem;
  if (fs::exists(p)) return p;
  if (const char* dir = std::getenv("HOPFCLEFT_FIXTURES")) {
    fs::path q = fs::path(dir) / p;
    if (fs::exists(q)) return q.string();
  }
  fail(ErrorKind::ParseError, "no such file: " + p + " (also looked in $HOPFCLEFT_FIXTURES)");
}

// ---------------------------------------------------------------------------
// Writers for results of braided constructions.

/// Declares an algebra in K-mod (flattened to one space) with module and algebra roles.
inline void write_d_algebra(DefinitionFile& d, const std::string& name, const DAlgebra& a, const std::string& base_role,
                            const std::string& base_space) {
  BasedSpace s = d.add_flat_space(name, a.alg.space);
  BasedSpace u = BasedSpace::unit(d.field);
  BasedSpace ks = base_space.empty() ? u : d.spaces.at(base_space);
  d.add_tensor("act_" + name, "left_action", relabel(a.obj.action, tensor(ks, s), s));
  d.add_tensor("mul_" + name, "mul", relabel(a.alg.mul, tensor(s, s), s));
  d.add_tensor("unit_" + name, "unit", relabel(a.alg.unit, u, s));
  d.add_role("module", name + "_mod", {{"space", name}, {"base", base_role}, {"action", "act_" + name}});
  d.add_role("algebra", name, {{"module", name + "_mod"}, {"mul", "mul_" + name}, {"unit", "unit_" + name}});
}

inline void write_comodule_algebra(DefinitionFile& d, const std::string& name, const ComoduleAlgebra& c,
                                   const std::string& hopf_role, const std::string& h_space,
                                   const std::string& base_role, const std::string& base_space) {
  write_d_algebra(d, name, c.b, base_role, base_space);
  BasedSpace s = d.spaces.at(name);
  d.add_tensor("coact_" + name, "right_coaction", relabel(c.coaction, s, tensor(s, d.spaces.at(h_space))));
  d.add_role("comodule_algebra", name + "_comod", {{"hopf", hopf_role}, {"algebra", name}, {"coaction", "coact_" + name}});
}

inline void write_cleft(DefinitionFile& d, const std::string& name, const CleftExtension& e, const std::string& hopf_role,
                        const std::string& h_space, const std::string& base_role, const std::string& base_space) {
  write_comodule_algebra(d, name, e.b, hopf_role, h_space, base_role, base_space);
  BasedSpace s = d.spaces.at(name);
  d.add_tensor("section_" + name, "section", relabel(e.section, d.spaces.at(h_space), s));
  d.add_role("cleft_extension", name + "_cleft", {{"comodule", name + "_comod"}, {"section", "section_" + name}});
}

// ---------------------------------------------------------------------------

class Runner {
 public:
  Runner(const Options& o, Model m) : o_(o), m_(std::move(m)) {}

  Outcome run() {
    const std::string& c = o_.command;
    if (c == "verify-hopf") return verify_hopf();
    if (c == "verify-yd") return single(check_yd(m_.yd_module(pick({"yd_module"}))));
    if (c == "verify-measuring") return verify_measuring();
    if (c == "verify-cocycle") return verify_cocycle();
    if (c == "crossed-product") return crossed(false);
    if (c == "smash") return crossed(true);
    if (c == "cleft-from-cocycle") return cleft_from_cocycle();
    if (c == "cocycle-from-cleft") return cocycle_from_cleft();
    if (c == "round-trip") return round_trip();
    if (c == "bosonize") return do_bosonize();
    if (c == "phi") return do_phi();
    if (c == "phi-inverse") return do_phi_inverse();
    if (c == "psi") return do_psi();
    if (c == "deform") return do_deform(false);
    if (c == "gr-check") return do_deform(true);
    if (c == "census") return do_census();
    if (c == "oracle") return do_oracle();
    if (c == "convolution-inverse") return do_convolution_inverse();
    if (c == "coinvariants") return do_coinvariants();
    fail(ErrorKind::ValidationError, "unknown command '" + c + "'");
  }

 private:
  std::string pick(std::initializer_list<const char*> kinds) const { return m_.pick(kinds, o_.object); }

  /// Like pick, but ignores --object (used for the secondary object of a command).
  std::string pick_any(std::initializer_list<const char*> kinds) const { return m_.pick(kinds); }

  static Outcome single(Report r) {
    Outcome out;
    out.reports.push_back(std::move(r));
    return out;
  }

  DefinitionFile base_file() const { return m_.file(); }

  Outcome verify_hopf() {
    std::string name = pick({"hopf_algebra", "bialgebra", "yd_hopf"});
    const RoleDecl& r = m_.role(name, {"hopf_algebra", "bialgebra", "yd_hopf"});
    if (r.kind == "yd_hopf") return single(check_yd_hopf(m_.yd_hopf(name)));
    BialgebraData b = m_.bialgebra(name);
    Report rep("Hopf algebra " + name);
    try {
      HopfAlgebraData h = make_hopf(b);
      rep.add("identity convolution invertible", true);
      rep.merge(check_hopf(h));
      if (r.keys.count("antipode"))
        rep.equal("declared antipode", m_.file().tensor_named(r.keys.at("antipode")), h.antipode);
    } catch (const Error& e) {
      if (!e.is_check_failure()) throw;
      rep.merge(check_bialgebra(b));
      rep.add("identity convolution invertible", false, e.what());
    }
    return single(rep);
  }

  Outcome verify_measuring() {
    Measuring m = m_.measuring(pick({"measuring"}));
    Report r = check_measuring(m);
    r.fact("action associative", measuring_is_associative(m) ? "yes" : "no");
    return single(r);
  }

  Outcome verify_cocycle() {
    auto [m, sigma] = m_.cocycle_data(pick({"cocycle"}));
    return single(check_cocycle(m, sigma));
  }

  Cocycle cocycle() const {
    auto [m, sigma] = m_.cocycle_data(pick({"cocycle"}));
    return make_cocycle(m, sigma);
  }

  /// Base role and space names for writing objects over the ambient of `h`.
  std::pair<std::string, std::string> base_names(const std::string& hopf_role) const {
    const RoleDecl& r = m_.role(hopf_role, {"yd_hopf", "hopf_algebra"});
    if (r.kind == "hopf_algebra") return {"1", ""};
    const RoleDecl& mod = m_.role(r.keys.at("module"), {"yd_module"});
    const std::string& base = mod.keys.at("base");
    if (base == "1") return {"1", ""};
    return {base, m_.role(base, {"hopf_algebra"}).keys.at("space")};
  }

  std::string hopf_role_of_measuring(const std::string& mname) const {
    return m_.role(mname, {"measuring"}).keys.at("hopf");
  }

  std::string space_of_hopf_role(const std::string& h) const {
    const RoleDecl& r = m_.role(h, {"yd_hopf", "hopf_algebra"});
    if (r.kind == "hopf_algebra") return r.keys.at("space");
    return m_.role(r.keys.at("module"), {"yd_module"}).keys.at("space");
  }

  Outcome crossed(bool smash) {
    Cocycle c = [&] {
      if (!smash) return cocycle();
      Measuring m = m_.measuring(pick({"measuring"}));
      return make_cocycle(m, trivial_sigma(m));
    }();
    std::string mname = smash ? pick({"measuring"}) : m_.role(pick({"cocycle"}), {"cocycle"}).keys.at("measuring");
    if (c.m.a.alg.space.is_unit() && smash) {
      // 𝟙 # H̄ is H̄ itself; nothing new to write beyond the report.
    }
    CrossedProduct cp = crossed_product(c);
    Outcome out = single(cp.report);
    std::string hr = hopf_role_of_measuring(mname);
    auto [br, bs] = base_names(hr);
    DefinitionFile d = base_file();
    write_comodule_algebra(d, smash ? "Smash" : "Crossed", cp.comod, hr, space_of_hopf_role(hr), br, bs);
    out.result = d;
    return out;
  }

  Outcome cleft_from_cocycle() {
    Cocycle c = cocycle();
    CleftExtension e = functor_F(c);
    Outcome out = single(check_cleft(e));
    std::string hr = hopf_role_of_measuring(m_.role(pick({"cocycle"}), {"cocycle"}).keys.at("measuring"));
    auto [br, bs] = base_names(hr);
    DefinitionFile d = base_file();
    write_cleft(d, "Cleft", e, hr, space_of_hopf_role(hr), br, bs);
    out.result = d;
    return out;
  }

  Outcome cocycle_from_cleft() {
    std::string name = pick({"cleft_extension"});
    CleftExtension e = m_.cleft(name);
    SectionCocycle sc = cocycle_from_section(e);
    Outcome out = single(sc.report);
    out.reports.push_back(iso_to_crossed(e).report);
    out.reports.back().fact("coinvariant dimension", std::to_string(sc.cocycle.m.a.alg.space.dim()));
    DefinitionFile d = base_file();
    std::string hr = m_.role(m_.role(name, {"cleft_extension"}).keys.at("comodule"), {"comodule_algebra"}).keys.at("hopf");
    auto [br, bs] = base_names(hr);
    write_d_algebra(d, "Bco", sc.cocycle.m.a, br, bs);
    BasedSpace a = d.spaces.at("Bco");
    BasedSpace hs = d.spaces.at(space_of_hopf_role(hr));
    d.add_tensor("nu_Bco", "measuring", relabel(sc.cocycle.m.nu, tensor(hs, a), a));
    d.add_role("measuring", "Bco_measuring", {{"hopf", hr}, {"algebra", "Bco"}, {"nu", "nu_Bco"}});
    d.add_tensor("sigma_Bco", "cocycle", relabel(sc.cocycle.sigma, tensor(hs, hs), a));
    d.add_role("cocycle", "sigma_gamma", {{"measuring", "Bco_measuring"}, {"sigma", "sigma_Bco"}});
    out.result = d;
    return out;
  }

  Outcome round_trip() {
    Cocycle c = cocycle();
    Outcome out = single(round_trip_check(c));
    out.reports.push_back(iso_to_crossed(functor_F(c)).report);
    return out;
  }

  Bosonization bos() const { return bosonize(m_.graded(pick_any({"graded_yd_hopf"}))); }

  Outcome do_bosonize() {
    Bosonization b = bos();
    Outcome out = single(b.report);
    DefinitionFile d = base_file();
    write_hopf(d, "H", b.hopf);
    out.result = d;
    return out;
  }

  /// π from a cocycle role over the unit measuring of R.
  Cocycle pi(const Bosonization& b) const {
    auto [m, sigma] = m_.cocycle_data(pick({"cocycle"}));
    if (!m.a.alg.space.is_unit() || m.h.space() != b.r.r.space())
      fail(ErrorKind::ValidationError, "expected a scalar cocycle on R ⊗ R");
    return make_cocycle(unit_measuring(b.r.r), sigma);
  }

  /// σ on 𝓗⊗𝓗 from --sigma (or the unique cocycle-tagged tensor of that shape).
  LinearMap sigma_h(const Bosonization& b) const {
    const BasedSpace hh = tensor(b.space(), b.space());
    const BasedSpace u = BasedSpace::unit(b.space().field());
    std::string name = o_.sigma;
    if (name.empty()) {
      for (const auto& n : m_.file().tensor_order) {
        const TensorDecl& t = m_.file().tensors.at(n);
        if (t.tag == "cocycle" && t.map.source() == hh && t.map.target() == u) {
          if (!name.empty()) fail(ErrorKind::ValidationError, "several cocycles on H ⊗ H; choose one with --sigma");
          name = n;
        }
      }
      if (name.empty()) fail(ErrorKind::ValidationError, "no cocycle tensor on H ⊗ H; pass --sigma");
    }
    const LinearMap& s = m_.file().tensor_named(name);
    if (s.source() != hh || s.target() != u) fail(ErrorKind::ValidationError, "tensor " + name + " is not H ⊗ H → 1");
    return s;
  }

  bool has_sigma_h(const Bosonization& b) const {
    if (!o_.sigma.empty()) return true;
    const BasedSpace hh = tensor(b.space(), b.space());
    for (const auto& [n, t] : m_.file().tensors)
      if (t.tag == "cocycle" && t.map.source() == hh) return true;
    return false;
  }

  Outcome do_phi() {
    Bosonization b = bos();
    ScalarCocycleH s = phi(b, pi(b));
    Outcome out = single(s.report);
    DefinitionFile d = base_file();
    d.add_tensor("sigma_phi", "cocycle", s.sigma);
    out.result = d;
    return out;
  }

  Outcome do_phi_inverse() {
    Bosonization b = bos();
    ScalarCocycleH s = check_Zprime(b, sigma_h(b));
    Outcome out = single(s.report);
    if (!s.in_Zprime) return out;
    Cocycle p = phi_inverse(b, s);
    Report r("restriction to R");
    r.merge(check_cocycle(p.m, p.sigma));
    out.reports.push_back(r);
    DefinitionFile d = base_file();
    std::string hr = m_.role(pick_any({"graded_yd_hopf"}), {"graded_yd_hopf"}).keys.at("hopf");
    d.add_tensor("eps_phi_inverse", "measuring", b.r.r.hopf.counit());
    d.add_role("measuring", "phi_inverse_measuring", {{"hopf", hr}, {"algebra", "1"}, {"nu", "eps_phi_inverse"}});
    d.add_tensor("sigma_phi_inverse", "cocycle", p.sigma);
    d.add_role("cocycle", "phi_inverse", {{"measuring", "phi_inverse_measuring"}, {"sigma", "sigma_phi_inverse"}});
    out.result = d;
    return out;
  }

  Outcome do_psi() {
    Bosonization b = bos();
    CleftExtension e = [&] {
      for (const auto& r : m_.file().roles)
        if (r.kind == "cleft_extension" && (o_.object.empty() || o_.object == r.name)) return m_.cleft(r.name);
      return functor_F(pi(b));
    }();
    CleftExtension E = psi(b, e);
    Outcome out = single(check_cleft(E));
    out.reports.push_back(check_Cprime_section(b, E));
    ScalarCocycleH s = sigma_gamma_restricts(b, E);
    out.reports.push_back(s.report);
    DefinitionFile d = base_file();
    write_hopf(d, "H", b.hopf);
    write_cleft(d, "E", E, "H", "H", "1", "");
    out.result = d;
    return out;
  }

  Outcome do_deform(bool graded_check) {
    Bosonization b = bos();
    ScalarCocycleH s = has_sigma_h(b) ? check_Zprime(b, sigma_h(b)) : phi(b, pi(b));
    Outcome out;
    if (!s.in_Z) {
      out.reports.push_back(s.report);
      return out;
    }
    HopfAlgebraData h = deform(b, s);
    Report hr = check_hopf(h);
    hr.fact("restriction relation", s.in_Zprime ? "holds" : "fails");
    out.reports.push_back(hr);
    if (graded_check) out.reports.push_back(gr_check(b, h));
    DefinitionFile d = base_file();
    write_hopf(d, "H_sigma", h);
    out.result = d;
    return out;
  }

  Outcome do_census() {
    Bosonization b = bos();
    Census c = cleft_prime_census(b, o_.bound);
    Outcome out = single(c.report);
    out.lines.push_back(c.text);
    return out;
  }

  Outcome do_oracle() {
    if (o_.args.empty()) fail(ErrorKind::ValidationError, "oracle needs a mode: cocycles, convolution-inverse or zprime");
    const std::string& mode = o_.args[0];
    Outcome out;
    DefinitionFile d = base_file();
    if (mode == "cocycles") {
      std::string mname = pick({"measuring"});
      Measuring m = m_.measuring(mname);
      auto list = enumerate_cocycles(m, o_.bound);
      Report r("oracle cocycles on " + mname);
      r.fact("search", full_space(tensor(m.h.space(), m.h.space()), m.a.alg.space, o_.bound).describe());
      r.fact("cocycles found", std::to_string(list.size()));
      for (std::size_t i = 0; i < list.size(); ++i) {
        r.equal("oracle cocycle " + std::to_string(i) + " recovered from its crossed product",
                recover_sigma(m, list[i].sigma), list[i].sigma);
        d.add_tensor("sigma_oracle" + std::to_string(i), "cocycle", list[i].sigma);
        d.add_role("cocycle", "oracle" + std::to_string(i), {{"measuring", mname}, {"sigma", "sigma_oracle" + std::to_string(i)}});
      }
      out.reports.push_back(r);
    } else if (mode == "convolution-inverse") {
      std::string name = pick({"hopf_algebra", "bialgebra"});
      BialgebraData b = m_.bialgebra(name);
      OracleInverse oi = oracle_convolution_inverse(LinearMap::identity(b.alg.space), b.coalg, b.alg, o_.bound);
      Report r("oracle convolution inverse of id on " + name);
      r.fact("candidates examined", std::to_string(oi.candidates));
      std::optional<LinearMap> solver;
      try {
        solver = antipode(b);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotHopf && e.kind() != ErrorKind::NotInvertible) throw;
      }
      r.add("oracle and solver agree on existence", oi.inverse.has_value() == solver.has_value());
      if (oi.inverse && solver) r.equal("oracle and solver agree", *oi.inverse, *solver);
      r.add("identity convolution invertible", oi.inverse.has_value());
      if (oi.inverse) d.add_tensor("antipode_oracle_" + name, "antipode", *oi.inverse);
      out.reports.push_back(r);
    } else if (mode == "zprime") {
      Bosonization b = bos();
      auto zp = enumerate_Zprime(b, o_.bound);
      auto zr = enumerate_cocycles(unit_measuring(b.r.r), o_.bound);
      Report r("oracle Z'(H)");
      r.fact("Z'(H) size", std::to_string(zp.size()));
      r.fact("Z(R) size", std::to_string(zr.size()));
      bool same = zp.size() == zr.size();
      for (std::size_t i = 0; same && i < zr.size(); ++i) same = phi(b, zr[i]).sigma == zp[i].sigma;
      r.add("Z'(H) is the image of Z(R), element for element", same);
      for (std::size_t i = 0; i < zp.size(); ++i) d.add_tensor("sigma_zprime" + std::to_string(i), "cocycle", zp[i].sigma);
      out.reports.push_back(r);
    } else {
      fail(ErrorKind::ValidationError, "unknown oracle mode '" + mode + "'");
    }
    out.result = d;
    return out;
  }

  Outcome do_convolution_inverse() {
    DefinitionFile d = base_file();
    Outcome out;
    std::string name = pick({"cocycle", "hopf_algebra", "bialgebra"});
    const RoleDecl& r = m_.role(name, {"cocycle", "hopf_algebra", "bialgebra"});
    Report rep("convolution inverse for " + name);
    if (r.kind == "cocycle") {
      auto [m, sigma] = m_.cocycle_data(name);
      try {
        LinearMap inv = convolution_inverse(sigma, hh_coalgebra(m.h).coalg, m.a.alg);
        rep.add("sigma convolution invertible", true);
        d.add_tensor("sigma_inverse_" + name, "map", inv);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInvertible) throw;
        rep.add("sigma convolution invertible", false, e.what());
      }
    } else {
      BialgebraData b = m_.bialgebra(name);
      try {
        d.add_tensor("antipode_" + name, "antipode", antipode(b));
        rep.add("identity convolution invertible", true);
      } catch (const Error& e) {
        if (!e.is_check_failure()) throw;
        rep.add("identity convolution invertible", false, e.what());
      }
    }
    out.reports.push_back(rep);
    out.result = d;
    return out;
  }

  Outcome do_coinvariants() {
    std::string name = pick({"comodule_algebra", "cleft_extension", "cocycle"});
    const RoleDecl& r = m_.role(name, {"comodule_algebra", "cleft_extension", "cocycle"});
    ComoduleAlgebra c = r.kind == "comodule_algebra"  ? m_.comodule_algebra(name)
                        : r.kind == "cleft_extension" ? m_.cleft(name).b
                                                      : crossed_product(cocycle()).comod;
    Coinvariants co = coinvariants(c);
    Report rep("coinvariants of " + name);
    rep.merge(check_d_algebra(co.alg));
    rep.fact("dimension", std::to_string(co.alg.alg.space.dim()));
    for (std::size_t i = 0; i < co.iota.source().dim(); ++i)
      rep.fact("basis " + co.iota.source().label(i), co.iota.describe_column(i));
    Outcome out = single(rep);
    return out;
  }

  const Options& o_;
  Model m_;
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["title"] = r.title();
  j["ok"] = r.ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks()) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) cj["witness"] = c.witness;
    j["checks"].push_back(cj);
  }
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.facts()) facts[k] = v;
  j["facts"] = facts;
  return j;
}

/// Runs one command; argv excludes the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"hopfcleft: exact checks for Hopf algebras, cocycles and cleft extensions"};
  app.add_option("command", o.command, "command to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("args", o.args, "definition files (oracle: mode, then files)");
  app.add_option("--report", o.report, "output shape")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", o.bound, "largest search space for oracle and census enumeration");
  app.add_option("--field-override", o.field_override, "reinterpret all values in this field");
  app.add_option("--out", o.out, "write the constructed objects to this file");
  app.add_option("--object", o.object, "role to operate on when several qualify");
  app.add_option("--sigma", o.sigma, "tensor holding a cocycle on the bosonization");
  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  int code = 0;
  Outcome res;
  std::string error;
  try {
    std::vector<std::string> files = o.args;
    if (o.command == "oracle" && !files.empty()) files.erase(files.begin());
    if (files.empty()) fail(ErrorKind::ValidationError, "no definition files given");
    std::vector<std::pair<std::string, std::string>> texts;
    for (const auto& f : files) {
      std::string p = resolve_path(f);
      texts.emplace_back(f, read_file(p));
    }
    std::optional<Field> fo;
    if (!o.field_override.empty()) fo = Field::parse(o.field_override);
    Model model(parse_definitions(texts, fo));
    Runner runner(o, std::move(model));
    res = runner.run();
    code = res.ok() ? 0 : 1;
    if (res.result && !o.out.empty()) {
      std::ofstream f(o.out);
      if (!f) fail(ErrorKind::ValidationError, "cannot write " + o.out);
      f << serialize(*res.result);
    }
  } catch (const Error& e) {
    code = e.is_check_failure() ? 1 : 2;
    error = e.what();
  } catch (const std::exception& e) {
    code = 2;
    error = e.what();
  }

  if (o.report == "json") {
    nlohmann::ordered_json j;
    j["command"] = o.command;
    j["status"] = code == 0 ? "pass" : code == 1 ? "fail" : "error";
    j["exit"] = code;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : res.reports) j["reports"].push_back(to_json(r));
    if (!res.lines.empty()) j["text"] = res.lines;
    if (!error.empty()) j["error"] = error;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : res.reports) out << r.text();
    for (const auto& l : res.lines) out << l;
    if (!error.empty()) err << "error: " << error << "\n";
    out << "result: " << (code == 0 ? "pass" : code == 1 ? "fail" : "error") << "\n";
  }
  return code;
}

}  // namespace hopfcleft::cli
