#pragma once

#include <stdexcept>
#include <string>

namespace rdc {

// Every failure the library can report, so callers (and the C API) can
// react to the kind rather than parse messages.
enum class ErrorKind {
  invalid_argument,
  parse,
  invariant,
  duplicate_name,
  io,
  domain,
  no_overlap,
  non_monotone,
  degenerate_projection,
  degenerate_curve,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invariant: return "invariant";
    case ErrorKind::duplicate_name: return "duplicate-name";
    case ErrorKind::io: return "io";
    case ErrorKind::domain: return "domain";
    case ErrorKind::no_overlap: return "no-overlap";
    case ErrorKind::non_monotone: return "non-monotone";
    case ErrorKind::degenerate_projection: return "degenerate-projection";
    case ErrorKind::degenerate_curve: return "degenerate-curve";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, std::string message) {
  throw Error(kind, std::move(message));
}

}  // namespace rdc
