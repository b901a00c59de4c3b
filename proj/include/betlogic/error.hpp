#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace betlogic {

enum class ErrorCode {
  ZeroOrNegativeWeight,
  WeightsNotNormalized,
  BadPartition,
  InvalidModel,
  UnknownWorld,
  EmptyUpdate,
  BadThreshold,
  SyntaxError,
  ExpansionTooLarge,
  BoundTooLarge,
  CellTooLargeForBruteForce,
  UniverseTooLarge,
  FrameMismatch,
  Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure. `offset` is a byte offset into the input text and
/// `expected` lists the tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace betlogic
