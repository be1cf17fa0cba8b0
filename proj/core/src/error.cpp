#include "gatelat/error.hpp"

namespace gatelat {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::DanglingEdge: return "DanglingEdge";
  case ErrorCode::NonEssential: return "NonEssential";
  case ErrorCode::DuplicateId: return "DuplicateId";
  case ErrorCode::UnknownEdge: return "UnknownEdge";
  case ErrorCode::UnknownVertex: return "UnknownVertex";
  case ErrorCode::NotBijective: return "NotBijective";
  case ErrorCode::EndpointMismatch: return "EndpointMismatch";
  case ErrorCode::SupportTooSmall: return "SupportTooSmall";
  case ErrorCode::SupportNotCovered: return "SupportNotCovered";
  case ErrorCode::ShiftMismatch: return "ShiftMismatch";
  case ErrorCode::NotInvertible: return "NotInvertible";
  case ErrorCode::EmptyContext: return "EmptyContext";
  case ErrorCode::OddPermutation: return "OddPermutation";
  case ErrorCode::DomainTooSmall: return "DomainTooSmall";
  case ErrorCode::NotEven: return "NotEven";
  case ErrorCode::NotMixing: return "NotMixing";
  case ErrorCode::IdentityInput: return "IdentityInput";
  case ErrorCode::InvalidImage: return "InvalidImage";
  case ErrorCode::PartialRule: return "PartialRule";
  case ErrorCode::NotInvertibleWithinBound: return "NotInvertibleWithinBound";
  case ErrorCode::PowerMismatch: return "PowerMismatch";
  case ErrorCode::BlockTooSmall: return "BlockTooSmall";
  case ErrorCode::NonCommuting: return "NonCommuting";
  case ErrorCode::PeriodMismatch: return "PeriodMismatch";
  case ErrorCode::NotNormalized: return "NotNormalized";
  case ErrorCode::NotSparseEnough: return "NotSparseEnough";
  case ErrorCode::TrivialInput: return "TrivialInput";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::VerificationFailed: return "VerificationFailed";
  case ErrorCode::TableTooLarge: return "TableTooLarge";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ValidationError: return "ValidationError";
  case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::ParseError:
    return 2;
  case ErrorCode::ValidationError:
  case ErrorCode::UnknownSuite:
    return 3;
  case ErrorCode::BudgetExceeded:
    return 5;
  default:
    return 4;
  }
}

void fail(ErrorCode code, std::string const &message) {
  throw Error(code, std::string(error_name(code)) + ": " + message);
}

} // namespace gatelat
