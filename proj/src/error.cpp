#include "costas/error.hpp"

namespace costas {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::BlockNotClosed: return "BlockNotClosed";
    case ErrorCode::DegenerateSize: return "DegenerateSize";
    case ErrorCode::CornerConditionFailed: return "CornerConditionFailed";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::T4ConditionFailed: return "T4ConditionFailed";
    case ErrorCode::G4ConditionFailed: return "G4ConditionFailed";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotAnFpr: return "NotAnFpr";
    case ErrorCode::NotAPrimePower: return "NotAPrimePower";
    case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::LimitTooLarge: return "LimitTooLarge";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace costas
