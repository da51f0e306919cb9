#pragma once

#include <stdexcept>
#include <string>

namespace opsf {

enum class ErrorKind {
  NonTerminating,
  DenominatorPole,
  DivisionByZero,
  DomainError,
  InvalidRecurrence,
  BasisNotGraded,
  ParameterDomain,
  ParseError,
  GapInIndices,
  NonpositiveB,
  FormulaPole,
  ParityViolation,
  ConvergenceDomain,
  ToleranceNotReached,
  NoConvergence,
  SizeTooLarge,
  DivergentSpec,
  StructureViolation,
  UsageError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace opsf
