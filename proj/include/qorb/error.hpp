#pragma once

#include <stdexcept>
#include <string>

namespace qorb {

// Error taxonomy shared by the library and the command-line front end.
// Exit-code mapping: InvalidInput -> 2, ResourceLimit -> 3, everything
// reaching the user as a failed identity -> 1.
enum class ErrorKind {
  DivisionByZero,
  IncompatibleField,
  DimensionMismatch,
  NonSymplectic,
  GroupExplosion,
  ResourceLimit,
  InvalidInput,
  Unsupported,
  Internal,  // invariant the library itself guarantees was observed broken
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::IncompatibleField: return "incompatible-field";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NonSymplectic: return "non-symplectic";
    case ErrorKind::GroupExplosion: return "group-explosion";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace qorb
