#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfcleft/linspace.hpp"

namespace hopfcleft {

/// One verified identity: name, outcome, and on failure the first basis witness.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

/// Ordered list of checks plus free-form facts recorded along the way.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& facts() const { return facts_; }

  bool add(std::string name, bool pass, std::string witness = {}) {
    checks_.push_back({std::move(name), pass, std::move(witness)});
    return pass;
  }

  /// Records whether two maps agree; the witness names the first source basis
  /// vector with differing images.
  bool equal(const std::string& name, const LinearMap& lhs, const LinearMap& rhs) {
    if (lhs.source() != rhs.source() || lhs.target() != rhs.target())
      return add(name, false, "shape " + lhs.signature() + " vs " + rhs.signature());
    auto diff = lhs.first_difference(rhs);
    if (!diff) return add(name, true);
    return add(name, false,
               "at " + lhs.source().label(*diff) + ": " + lhs.describe_column(*diff) + " ≠ " + rhs.describe_column(*diff));
  }

  void fact(std::string key, std::string value) { facts_.emplace_back(std::move(key), std::move(value)); }

  /// Appends another report's checks and facts, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {}) {
    const std::string p = prefix.empty() ? std::string() : prefix + ": ";
    for (const auto& c : other.checks_) checks_.push_back({p + c.name, c.pass, c.witness});
    for (const auto& f : other.facts_) facts_.emplace_back(p + f.first, f.second);
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.pass) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return c.pass;
    fail(ErrorKind::ValidationError, "no check named '" + name + "'");
  }

  std::string text() const {
    std::string s;
    if (!title_.empty()) s += "# " + title_ + "\n";
    for (const auto& c : checks_) {
      s += c.pass ? "PASS " : "FAIL ";
      s += c.name;
      if (!c.pass && !c.witness.empty()) s += " -- " + c.witness;
      s += "\n";
    }
    for (const auto& [k, v] : facts_) s += "  " + k + " = " + v + "\n";
    return s;
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> facts_;
};

}  // namespace hopfcleft
