#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiedler {

enum class ErrorKind {
  InvalidVertex,
  InvalidGraph,
  BoundaryNotLeaf,
  InvalidInput,
  DimensionMismatch,
  DivisionStructure,
  InvalidWeight,
  EmptyMatrix,
  DegeneratePerron,
  NumericalAmbiguity,
  NotIncreasing,
  InvalidParameter,
  NotFiedlerLike,
  NotInDomain,
  NotRealizable,
  DegenerateInput,
  WrongCase,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `witness` carries the offending
/// vertices or edge endpoints when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace fiedler
