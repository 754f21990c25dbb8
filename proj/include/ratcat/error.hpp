#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratcat {

enum class ErrorKind {
  BadDimensions,
  NotCoprime,
  BadLength,
  NotMonotone,
  BelowDiagonal,
  BadCharacter,
  CellNotAboveThePath,
  OutOfBounds,
  UnsupportedM,
  BadResidue,
  InvalidTriple,
  NotRealizable,
  CoefficientOverflow,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::BelowDiagonal: return "BelowDiagonal";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::CellNotAboveThePath: return "CellNotAboveThePath";
    case ErrorKind::OutOfBounds: return "OutOfBounds";
    case ErrorKind::UnsupportedM: return "UnsupportedM";
    case ErrorKind::BadResidue: return "BadResidue";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::CoefficientOverflow: return "CoefficientOverflow";
  }
  return "Unknown";
}

// Every validation failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ratcat
