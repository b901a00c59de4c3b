#include "betlogic/error.hpp"

#include <utility>

namespace betlogic {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroOrNegativeWeight: return "ZeroOrNegativeWeight";
    case ErrorCode::WeightsNotNormalized: return "WeightsNotNormalized";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::UnknownWorld: return "UnknownWorld";
    case ErrorCode::EmptyUpdate: return "EmptyUpdate";
    case ErrorCode::BadThreshold: return "BadThreshold";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::CellTooLargeForBruteForce: return "CellTooLargeForBruteForce";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
    msg += expected[i];
  }
  if (!found.empty()) msg += " in \"" + found + "\"";
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error(ErrorCode::SyntaxError, describe(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace betlogic
