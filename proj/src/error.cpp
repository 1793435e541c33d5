#include "tomex/error.hpp"

#include <sstream>

namespace tomex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnknownAgent: return "UnknownAgent";
    case ErrorCode::NotAgentFormula: return "NotAgentFormula";
    case ErrorCode::ModalFormulaNotAllowed: return "ModalFormulaNotAllowed";
    case ErrorCode::UnsupportedRevisionFormula: return "UnsupportedRevisionFormula";
    case ErrorCode::ContractionImpossible: return "ContractionImpossible";
    case ErrorCode::NoLawConsistentModel: return "NoLawConsistentModel";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentLaws: return "InconsistentLaws";
    case ErrorCode::DepthViolation: return "DepthViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string syntax_message(std::size_t position, const std::vector<std::string>& expected,
                           const std::string& found) {
  std::ostringstream os;
  os << "at position " << position << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& found)
    : Error(ErrorCode::SyntaxError, syntax_message(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace tomex
