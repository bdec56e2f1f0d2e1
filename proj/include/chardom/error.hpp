#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chardom {

enum class ErrorKind {
  BoundaryPoint,
  DegenerateRay,
  MalformedInput,
  DegenerateTopology,
  NoConvergence,
  BadDegree,
  ImmersedUnresolved,
  NotDegenerate,
  TooLarge,
  PostconditionFailed,
  ParseError,
  StructureError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chardom
