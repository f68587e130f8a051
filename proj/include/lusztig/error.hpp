#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lusztig {

enum class ErrorKind {
  InvalidPrime,
  DivisionByZero,
  ZeroEntry,
  EmptyForm,
  Unrealizable,
  UnsupportedDimension,
  DimensionMismatch,
  NotNilpotent,
  NotInAlgebra,
  UnsupportedShape,
  TooLarge,
  NotTriangular,
  WrongSupport,
  ZeroFunction,
  IndexOutOfRange,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::EmptyForm: return "EmptyForm";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::WrongSupport: return "WrongSupport";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lusztig
