#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace costas {

enum class ErrorCode {
  CompositeCharacteristic,
  DegreeOutOfRange,
  FieldTooLarge,
  NoIrreducibleFound,
  FieldMismatch,
  DivisionByZero,
  ZeroElement,
  NotPrimitive,
  EvenModulus,
  NotAPermutation,
  SizeTooLarge,
  BlockNotClosed,
  DegenerateSize,
  CornerConditionFailed,
  WrongCharacteristic,
  T4ConditionFailed,
  G4ConditionFailed,
  EvenPrime,
  NotPrime,
  NotAnFpr,
  NotAPrimePower,
  PreconditionNotMet,
  InternalInconsistency,
  LimitTooLarge,
  ExponentOutOfRange,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI, the Python bindings, tests) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace costas
