#pragma once

#include <stdexcept>
#include <string>

namespace mdc {

enum class ErrKind {
  DivisionByZero,
  InvalidTau,
  BackendMismatch,
  IdentityInput,
  SymbolicMultiplierViolation,
  SymbolicObstruction,
  TauConstraintViolation,
  NonDiscrete,
  NonOrbifold,
  RecipeInvariantViolation,
  CertificateFailure,
  UnknownGenerator,
  UnknownFamily,
  DepthOverflow,
  BadViewport,
  TooFewPoints,
  EmptyGenerators,
  ParseError,
  Internal,
};

inline const char* err_name(ErrKind k) {
  switch (k) {
    case ErrKind::DivisionByZero: return "DivisionByZero";
    case ErrKind::InvalidTau: return "InvalidTau";
    case ErrKind::BackendMismatch: return "BackendMismatch";
    case ErrKind::IdentityInput: return "IdentityInput";
    case ErrKind::SymbolicMultiplierViolation: return "SymbolicMultiplierViolation";
    case ErrKind::SymbolicObstruction: return "SymbolicObstruction";
    case ErrKind::TauConstraintViolation: return "TauConstraintViolation";
    case ErrKind::NonDiscrete: return "NonDiscrete";
    case ErrKind::NonOrbifold: return "NonOrbifold";
    case ErrKind::RecipeInvariantViolation: return "RecipeInvariantViolation";
    case ErrKind::CertificateFailure: return "CertificateFailure";
    case ErrKind::UnknownGenerator: return "UnknownGenerator";
    case ErrKind::UnknownFamily: return "UnknownFamily";
    case ErrKind::DepthOverflow: return "DepthOverflow";
    case ErrKind::BadViewport: return "BadViewport";
    case ErrKind::TooFewPoints: return "TooFewPoints";
    case ErrKind::EmptyGenerators: return "EmptyGenerators";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace mdc
