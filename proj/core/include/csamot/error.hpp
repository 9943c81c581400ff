#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csamot {

// Every precondition violation in the library surfaces as a csamot::Error
// carrying one of these kinds.
enum class ErrorKind {
  NonSquare,
  DimensionMismatch,
  NotDivisible,
  AlgebraMismatch,
  CharTwo,
  EmptyTuple,
  TooLarge,
  OutOfBox,
  CodimMismatch,
  CodimOutOfRange,
  TopCodim,
  IndexOutOfRange,
  NotSelfDual,
  RankMismatch,
  NotPrime,
  RangeError,
  WeightOutOfRange,
  UnresolvableDifferential,
  HigherDifferentialPossible,
  Unclassified,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace csamot
