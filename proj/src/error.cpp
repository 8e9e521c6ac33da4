#include "possind/error.hpp"

namespace possind {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::EmptyFrame: return "EmptyFrame";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::UnknownValue: return "UnknownValue";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ScopeMismatch: return "ScopeMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotNormalised: return "NotNormalised";
    case ErrorCode::BadTriplet: return "BadTriplet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace possind
