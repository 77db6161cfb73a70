#pragma once

#include <stdexcept>
#include <string>

namespace ncalg {

enum class ErrorKind {
  DenominatorVanishes,
  PoleAtPoint,
  DivergentLimit,
  NotRepresentable,
  ParseError,
  AlphabetMismatch,
  NotOrientable,
  NotConfluent,
  SizeExceeded,
  NotHomogeneous,
  LatticeMismatch,
  UnknownType,
  WrongArity,
  UnknownPreset,
  InvalidArgument,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncalg
