#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gatelat {

enum class ErrorCode {
  // edge_shift
  DanglingEdge,
  NonEssential,
  DuplicateId,
  // gate
  UnknownEdge,
  UnknownVertex,
  NotBijective,
  EndpointMismatch,
  SupportTooSmall,
  SupportNotCovered,
  ShiftMismatch,
  NotInvertible,
  // parity
  EmptyContext,
  OddPermutation,
  DomainTooSmall,
  NotEven,
  NotMixing,
  IdentityInput,
  // automaton
  InvalidImage,
  PartialRule,
  NotInvertibleWithinBound,
  PowerMismatch,
  BlockTooSmall,
  // lattice
  NonCommuting,
  PeriodMismatch,
  NotNormalized,
  NotSparseEnough,
  TrivialInput,
  BudgetExceeded,
  // plumbing
  VerificationFailed,
  TableTooLarge,
  InvalidArgument,
  ParseError,
  ValidationError,
  UnknownSuite,
};

std::string_view error_name(ErrorCode code) noexcept;

// 2 parse, 3 validation, 4 domain, 5 budget
int exit_code(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const &message)
      : std::runtime_error(message), _code(code) {}

  ErrorCode code() const noexcept { return _code; }

 private:
  ErrorCode _code;
};

[[noreturn]] void fail(ErrorCode code, std::string const &message);

} // namespace gatelat
