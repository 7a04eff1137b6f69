#include "fiedler/error.hpp"

namespace fiedler {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "invalid-vertex";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::BoundaryNotLeaf: return "boundary-not-leaf";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::DivisionStructure: return "division-structure";
    case ErrorKind::InvalidWeight: return "invalid-weight";
    case ErrorKind::EmptyMatrix: return "empty-matrix";
    case ErrorKind::DegeneratePerron: return "degenerate-perron";
    case ErrorKind::NumericalAmbiguity: return "numerical-ambiguity";
    case ErrorKind::NotIncreasing: return "not-increasing";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NotFiedlerLike: return "not-fiedler-like";
    case ErrorKind::NotInDomain: return "not-in-domain";
    case ErrorKind::NotRealizable: return "not-realizable";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::WrongCase: return "wrong-case";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace fiedler
