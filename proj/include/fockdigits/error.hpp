#ifndef FOCKDIGITS_ERROR_HPP
#define FOCKDIGITS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fockdigits {

// Failure taxonomy shared by every module. Each operation documents which
// kinds it can raise; tests match on kind(), not on message text.
enum class ErrorKind {
  OutOfRange,
  InvalidDigit,
  Overflow,
  DimMismatch,
  DimTooLarge,
  BadK,
  NumericalDrift,
  BadDigit,
  QuadratureUnderResolved,
  SlotOutOfRange,
  GuardViolation,
  ShiftOutOfRange,
  AllSummandsVanish,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidDigit: return "InvalidDigit";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::DimTooLarge: return "DimTooLarge";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::NumericalDrift: return "NumericalDrift";
    case ErrorKind::BadDigit: return "BadDigit";
    case ErrorKind::QuadratureUnderResolved: return "QuadratureUnderResolved";
    case ErrorKind::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorKind::GuardViolation: return "GuardViolation";
    case ErrorKind::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorKind::AllSummandsVanish: return "AllSummandsVanish";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        m_kind(kind) {}

  ErrorKind kind() const noexcept { return m_kind; }

 private:
  ErrorKind m_kind;
};

}  // namespace fockdigits

#endif  // FOCKDIGITS_ERROR_HPP
