#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tomex {

enum class ErrorCode {
  SyntaxError,
  UnknownSymbol,
  UnknownAgent,
  NotAgentFormula,
  ModalFormulaNotAllowed,
  UnsupportedRevisionFormula,
  ContractionImpossible,
  NoLawConsistentModel,
  EmptyPool,
  ParseError,
  InconsistentLaws,
  DepthViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every engine failure carries a stable code; the CLI prints it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& found);

  /// Zero-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace tomex
