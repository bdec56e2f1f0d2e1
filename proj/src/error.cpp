#include "chardom/error.hpp"

namespace chardom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundaryPoint: return "BoundaryPoint";
    case ErrorKind::DegenerateRay: return "DegenerateRay";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::DegenerateTopology: return "DegenerateTopology";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::ImmersedUnresolved: return "ImmersedUnresolved";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::StructureError: return "StructureError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace chardom
