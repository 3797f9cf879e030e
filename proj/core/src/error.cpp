#include "smalldiv/error.hpp"

namespace smalldiv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotIrrational: return "NotIrrational";
    case ErrorKind::RealityViolation: return "RealityViolation";
    case ErrorKind::AlphaMismatch: return "AlphaMismatch";
    case ErrorKind::ResonantObstruction: return "ResonantObstruction";
    case ErrorKind::NotNonDiophantine: return "NotNonDiophantine";
    case ErrorKind::InsufficientModes: return "InsufficientModes";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::RepeatedRoots: return "RepeatedRoots";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace smalldiv
