#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace extremal {

enum class ErrorKind {
  CharTwo,
  InvalidField,
  MixedFields,
  DimensionMismatch,
  DivisionByZero,
  ParseError,
  InvalidGraph,
  NotFiniteType,
  NotAffineType,
  NotDynkin,
  DegreeCapExceeded,
  UnknownBasisElement,
  MissingParameter,
  MissingDeltaValue,
  NonBasisWeight,
  NotProportional,
  NotExtremal,
  BothZero,
  GenericityFailed,
  ConstraintUnsolvable,
  CertificateFailed,
  PreconditionViolated,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::NotAffineType: return "NotAffineType";
    case ErrorKind::NotDynkin: return "NotDynkin";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::UnknownBasisElement: return "UnknownBasisElement";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::MissingDeltaValue: return "MissingDeltaValue";
    case ErrorKind::NonBasisWeight: return "NonBasisWeight";
    case ErrorKind::NotProportional: return "NotProportional";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::GenericityFailed: return "GenericityFailed";
    case ErrorKind::ConstraintUnsolvable: return "ConstraintUnsolvable";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace extremal
