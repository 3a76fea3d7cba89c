#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsk {

/// Failure categories raised by the library. The CLI prints them by name.
enum class ErrorKind {
  NotSimple,
  Inessential,
  SurfaceMismatch,
  GenusTooSmall,
  NegativePower,
  NotLSpaceForm,
  AnchorViolation,
  BudgetExceeded,
  SyntaxError,
  IndexOutOfRange,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::Inessential: return "Inessential";
    case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::NegativePower: return "NegativePower";
    case ErrorKind::NotLSpaceForm: return "NotLSpaceForm";
    case ErrorKind::AnchorViolation: return "AnchorViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lsk
