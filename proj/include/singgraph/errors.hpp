#pragma once

#include <stdexcept>
#include <string>

namespace sg {

// Exit-code buckets used by the CLI: 1 = I/O, 2 = domain rejection,
// 3 = internal invariant violation.
enum class ErrorKind { Io = 1, Domain = 2, Internal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }

  // Machine-readable diagnostic, e.g. "not_rational".
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorKind::Io, "io_error", message) {}
};

// Malformed JSON or a document that does not match the graph schema.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message)
      : Error(ErrorKind::Domain, "schema_error", message) {}
};

class ValidationError : public Error {
 public:
  enum class Reason {
    SelfLoop,
    DuplicateEdge,
    WeightAboveMinusTwo,
    Disconnected,
    DuplicateId,
  };

  ValidationError(Reason reason, const std::string& message)
      : Error(ErrorKind::Domain, reason_code(reason), message), reason_(reason) {}

  Reason reason() const { return reason_; }

  static std::string reason_code(Reason reason) {
    switch (reason) {
      case Reason::SelfLoop: return "self_loop";
      case Reason::DuplicateEdge: return "duplicate_edge";
      case Reason::WeightAboveMinusTwo: return "weight_above_minus_two";
      case Reason::Disconnected: return "disconnected";
      case Reason::DuplicateId: return "duplicate_id";
    }
    return "validation_error";
  }

 private:
  Reason reason_;
};

// The input is well-formed but outside the class an operation handles
// (not negative definite, not rational, e < 4, ...).
class DomainError : public Error {
 public:
  DomainError(std::string code, const std::string& message)
      : Error(ErrorKind::Domain, std::move(code), message) {}
};

// A "cannot happen" condition: a theorem-backed cross-check failed or state
// was corrupted. Never downgraded; the CLI exits 3.
class InternalError : public Error {
 public:
  InternalError(std::string code, const std::string& message)
      : Error(ErrorKind::Internal, std::move(code), message) {}
};

inline DomainError not_negative_definite() {
  return DomainError("not_negative_definite",
                     "intersection matrix is not negative definite");
}

inline DomainError not_rational(const std::string& message = "the singularity is not rational") {
  return DomainError("not_rational", message);
}

inline DomainError not_almost_reduced() {
  return DomainError("not_almost_reduced",
                     "fundamental cycle is not reduced on all non -2-curves");
}

}  // namespace sg
