#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullprice {

enum class ErrorKind {
  EmptyMarket,
  NonPositiveAttribute,
  DuplicateId,
  InvalidConfig,
  VerticalPair,
  MismatchedMarket,
  PositiveSlope,
  OutOfDomain,
  EmptyFrontier,
  InvalidCdf,
  EmptyHistory,
  AllRecordsInconsistent,
  AllZeroCounts,
  UnknownChosenId,
  OutOfRangePrice,
  InvalidProblem,
  ParseError,
  IoError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Library error. what() reads "<Kind>: <detail>" so the kind name is
/// always visible in CLI output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hullprice
