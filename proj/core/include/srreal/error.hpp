#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srreal {

enum class ErrorKind {
  DuplicateVertex,
  UnknownVertexInFacet,
  NonMaximalFacet,
  OrphanVertex,
  OddOrNonpositiveDegree,
  EmptyFacet,
  InvalidVertexId,
  UnknownVertex,
  NotAFace,
  DegreeMismatch,
  InadmissibleSimplex,
  NoCanonicalMap,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// All failures raised by the library carry a kind plus the offending item.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string subject, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorKind kind_;
  std::string subject_;
};

}  // namespace srreal
