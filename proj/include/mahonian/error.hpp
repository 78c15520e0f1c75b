#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mahonian {

enum class ErrorCode {
  InvalidArguments,
  LetterOutOfRange,
  MultiplicityMismatch,
  ClassTooLarge,
  Overflow,
  InvalidBipartition,
  SearchSpaceTooLarge,
  AlphabetMismatch,
  SizeCapExceeded,
  ConditionsNotSatisfied,
  InvalidCode,
  UniverseTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mahonian
