#include "srreal/error.hpp"

namespace srreal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownVertexInFacet: return "UnknownVertexInFacet";
    case ErrorKind::NonMaximalFacet: return "NonMaximalFacet";
    case ErrorKind::OrphanVertex: return "OrphanVertex";
    case ErrorKind::OddOrNonpositiveDegree: return "OddOrNonpositiveDegree";
    case ErrorKind::EmptyFacet: return "EmptyFacet";
    case ErrorKind::InvalidVertexId: return "InvalidVertexId";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InadmissibleSimplex: return "InadmissibleSimplex";
    case ErrorKind::NoCanonicalMap: return "NoCanonicalMap";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string subject, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      subject_(std::move(subject)) {}

}  // namespace srreal
