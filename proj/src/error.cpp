#include "mono/error.hpp"

namespace mono {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::CentralCharacterMismatch: return "CentralCharacterMismatch";
    case ErrorCode::FamilyNotInMonocentre: return "FamilyNotInMonocentre";
    case ErrorCode::Precondition: return "PreconditionError";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mono
