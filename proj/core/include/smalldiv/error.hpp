#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smalldiv {

enum class ErrorKind {
  InvalidArgument,
  PrecisionExhausted,
  NotIrrational,
  RealityViolation,
  AlphaMismatch,
  ResonantObstruction,
  NotNonDiophantine,
  InsufficientModes,
  CertificationFailed,
  RepeatedRoots,
  NotQuadratic,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that front-ends can
// map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace smalldiv
