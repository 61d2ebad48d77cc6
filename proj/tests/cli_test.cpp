#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "hopfcleft/cli.hpp"
#include "hopfcleft/fixtures.hpp"

using namespace hopfcleft;
namespace fx = hopfcleft::fixtures;

namespace {

std::string fixture(const std::string& name) { return std::string(HOPFCLEFT_FIXTURE_DIR) + "/" + name; }

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Invocation run_binary(const std::string& args) {
  std::string cmd = std::string(HOPFCLEFT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  auto pos = t.rfind('\n');
  return pos == std::string::npos ? t : t.substr(pos + 1);
}

}  // namespace

TEST(Cli, PassingChecksExitZero) {
  const std::vector<std::vector<std::string>> cases{
      {"verify-hopf", fixture("kc2_f3.def")},
      {"verify-hopf", fixture("kc4_f5.def")},
      {"verify-hopf", fixture("line_c2_f3.def"), "--object", "R"},
      {"verify-yd", fixture("line_c4_f5.def")},
      {"verify-measuring", fixture("sign_measuring_f3.def")},
      {"verify-cocycle", fixture("line_c2_f3.def")},
      {"verify-cocycle", fixture("line_c4_f5.def"), "--object", "pi3"},
      {"crossed-product", fixture("line_c2_f3.def")},
      {"smash", fixture("sign_measuring_f3.def")},
      {"cleft-from-cocycle", fixture("line_c2_f3.def")},
      {"round-trip", fixture("sign_measuring_f3.def")},
      {"bosonize", fixture("line_c4_zeta4.def")},
      {"phi", fixture("line_c4_f5.def"), "--object", "pi2"},
      {"psi", fixture("line_c4_f5.def"), "--object", "pi2"},
      {"gr-check", fixture("line_c4_f5.def"), "--object", "pi2"},
      {"oracle", "cocycles", fixture("line_c2_f3.def")},
      {"oracle", "convolution-inverse", fixture("kc4_f5.def")},
      {"convolution-inverse", fixture("kc4_f5.def")},
  };
  for (const auto& c : cases) {
    Invocation r = run(c);
    EXPECT_EQ(r.code, 0) << c[0] << " " << c[1] << "\n" << r.out << r.err;
    EXPECT_EQ(last_line(r.out), "result: pass") << c[0];
  }
}

TEST(Cli, FailingChecksExitOne) {
  const std::vector<std::vector<std::string>> cases{
      {"verify-hopf", fixture("monoid_f3.def")},
      {"verify-hopf", fixture("corrupted_c4_f5.def")},
      {"verify-yd", fixture("broken_yd_f3.def")},
      {"verify-cocycle", fixture("corrupted_cocycle_f5.def")},
      {"oracle", "convolution-inverse", fixture("monoid_f3.def")},
  };
  for (const auto& c : cases) {
    Invocation r = run(c);
    EXPECT_EQ(r.code, 1) << c[0] << " " << c[1] << "\n" << r.out << r.err;
    EXPECT_EQ(last_line(r.out), "result: fail") << c[0];
  }
}

TEST(Cli, BadInputExitTwo) {
  EXPECT_EQ(run({"verify-hopf", fixture("no_such_file.def")}).code, 2);
  EXPECT_EQ(run({"no-such-command", fixture("kc2_f3.def")}).code, 2);
  EXPECT_EQ(run({"verify-hopf"}).code, 2);
  EXPECT_EQ(run({"verify-hopf", fixture("line_c2_f3.def")}).code, 2);  // ambiguous without --object
  EXPECT_EQ(run({"verify-cocycle", fixture("kc2_f3.def")}).code, 2);  // no cocycle role
  EXPECT_EQ(run({"oracle", "cocycles", fixture("line_c4_zeta4.def")}).code, 2);
}

TEST(Cli, CorruptedAlgebraWitness) {
  Invocation r = run({"verify-hopf", fixture("corrupted_c4_f5.def"), "--report", "json"});
  ASSERT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["exit"], 1);
  bool found = false;
  for (const auto& rep : j["reports"])
    for (const auto& c : rep["checks"])
      if (c["name"] == "associativity") {
        EXPECT_FALSE(c["pass"].get<bool>());
        EXPECT_NE(c["witness"].get<std::string>().find("g⊗g⊗g2"), std::string::npos);
        found = true;
      }
  EXPECT_TRUE(found);
}

TEST(Cli, JsonShape) {
  Invocation r = run({"verify-hopf", fixture("kc2_f3.def"), "--report", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "verify-hopf");
  EXPECT_EQ(j["status"], "pass");
  ASSERT_FALSE(j["reports"].empty());
  for (const auto& c : j["reports"][0]["checks"]) EXPECT_TRUE(c["pass"].get<bool>());
}

TEST(Cli, OutFileIsParseable) {
  auto path = std::filesystem::temp_directory_path() / "hopfcleft_cli_test_out.def";
  Invocation r = run({"cleft-from-cocycle", fixture("line_c2_f3.def"), "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  Model m(parse_definition(read_file(path.string())));
  EXPECT_FALSE(m.file().roles_of("cleft_extension").empty());
  Invocation again = run({"cocycle-from-cleft", path.string()});
  EXPECT_EQ(again.code, 0) << again.out << again.err;
  std::filesystem::remove(path);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(run_binary("verify-hopf " + fixture("kc2_f3.def")).code, 0);
  EXPECT_EQ(run_binary("verify-hopf " + fixture("monoid_f3.def")).code, 1);
  EXPECT_EQ(run_binary("verify-hopf " + fixture("missing.def")).code, 2);
}

// Isomorphic crossed products 𝕜#_{Φ(π_λ)}𝓗 arise exactly from λ' = a²λ (rescaling x by a),
// so the classes are the orbits of F_p under multiplication by nonzero squares.
TEST(Census, ClassesAreSquareOrbits) {
  for (auto g : {fx::line_c2_f3(), fx::line_c4_f5()}) {
    Bosonization b = bosonize(g);
    Census c = cleft_prime_census(b, 1000000);
    EXPECT_TRUE(c.report.ok()) << c.report.text();
    const std::int64_t p = b.space().field().modulus();
    std::set<std::int64_t> squares;
    for (std::int64_t a = 1; a < p; ++a) squares.insert(a * a % p);
    for (std::size_t i = 0; i < c.zr.size(); ++i)
      for (std::size_t j = 0; j < c.zr.size(); ++j) {
        std::int64_t li = c.zr[i].sigma.entry(0, 3).residue(), lj = c.zr[j].sigma.entry(0, 3).residue();
        bool same = li == lj;
        for (std::int64_t s : squares) same = same || (li * s % p == lj);
        EXPECT_EQ(c.class_e2[i] == c.class_e2[j], same) << li << " vs " << lj;
        EXPECT_EQ(c.class_e1[i] == c.class_e1[j], same) << li << " vs " << lj;
      }
  }
}

TEST(Census, OutputIsByteStable) {
  for (const char* f : {"line_c2_f3.def", "line_c4_f5.def"}) {
    Invocation a = run({"census", fixture(f)});
    Invocation b = run_binary("census " + fixture(f));
    ASSERT_EQ(a.code, 0) << a.out << a.err;
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("descriptions agree: yes"), std::string::npos);
  }
}

TEST(Cli, CorruptedCocycleNamesRelation) {
  Invocation r = run({"verify-cocycle", fixture("corrupted_cocycle_f5.def")});
  ASSERT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL cocycle condition -- at 1⊗1⊗x"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("FAIL sigma: K-linear -- at g⊗1⊗x"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS normalization"), std::string::npos) << r.out;
}
