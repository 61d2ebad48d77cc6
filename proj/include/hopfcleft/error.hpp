#pragma once

#include <stdexcept>
#include <string>

namespace hopfcleft {

/// Failure categories shared by every module. The CLI maps `Input` kinds to
/// exit status 2 and `Check` kinds to exit status 1.
enum class ErrorKind {
  FieldMismatch,
  DivisionByZero,
  NoSuchRoot,
  ShapeMismatch,
  NoSolution,
  NotInvertible,
  NotHopf,
  BaseMismatch,
  CorruptFixture,
  InducedStructureFailure,
  FactorizationFailure,
  AxiomFailure,
  TheoremViolation,
  SearchSpaceTooLarge,
  ParseError,
  ValidationError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotHopf: return "NotHopf";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::CorruptFixture: return "CorruptFixture";
    case ErrorKind::InducedStructureFailure: return "InducedStructureFailure";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True when the failure is a mathematical check failing on well-formed
  /// input, as opposed to malformed input.
  bool is_check_failure() const noexcept {
    switch (kind_) {
      case ErrorKind::NotInvertible:
      case ErrorKind::NotHopf:
      case ErrorKind::AxiomFailure:
      case ErrorKind::TheoremViolation:
      case ErrorKind::FactorizationFailure:
      case ErrorKind::InducedStructureFailure:
      case ErrorKind::NoSolution:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hopfcleft
