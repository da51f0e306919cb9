#include "opsf/error.hpp"

namespace opsf {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::DenominatorPole: return "DenominatorPole";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidRecurrence: return "InvalidRecurrence";
    case ErrorKind::BasisNotGraded: return "BasisNotGraded";
    case ErrorKind::ParameterDomain: return "ParameterDomain";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GapInIndices: return "GapInIndices";
    case ErrorKind::NonpositiveB: return "NonpositiveB";
    case ErrorKind::FormulaPole: return "FormulaError(pole)";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ConvergenceDomain: return "ConvergenceDomain";
    case ErrorKind::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::DivergentSpec: return "DivergentSpec";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace opsf
