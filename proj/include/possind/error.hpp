#pragma once

#include <stdexcept>
#include <string>

namespace possind {

enum class ErrorCode {
  DuplicateVariable = 1,
  EmptyFrame,
  UnknownVariable,
  UnknownValue,
  OutOfRange,
  ScopeMismatch,
  SpaceMismatch,
  NotNormalised,
  BadTriplet,
  TooLarge,
  TooSmall,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace possind
