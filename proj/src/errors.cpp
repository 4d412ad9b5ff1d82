#include "hullprice/errors.hpp"

namespace hullprice {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyMarket: return "EmptyMarket";
    case ErrorKind::NonPositiveAttribute: return "NonPositiveAttribute";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::VerticalPair: return "VerticalPair";
    case ErrorKind::MismatchedMarket: return "MismatchedMarket";
    case ErrorKind::PositiveSlope: return "PositiveSlope";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::EmptyFrontier: return "EmptyFrontier";
    case ErrorKind::InvalidCdf: return "InvalidCdf";
    case ErrorKind::EmptyHistory: return "EmptyHistory";
    case ErrorKind::AllRecordsInconsistent: return "AllRecordsInconsistent";
    case ErrorKind::AllZeroCounts: return "AllZeroCounts";
    case ErrorKind::UnknownChosenId: return "UnknownChosenId";
    case ErrorKind::OutOfRangePrice: return "OutOfRangePrice";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind) {}

}  // namespace hullprice
