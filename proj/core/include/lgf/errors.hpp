#pragma once

#include <stdexcept>
#include <string>

namespace lgf {

enum class ErrorKind {
  PiOverflow,
  DivisorNotSupported,
  DivideByZero,
  MixedRadicand,
  BadConstantTerm,
  TruncationExceeded,
  ParseError,
  NotAnEdge,
  OnSlit,
  RecursionBudgetExceeded,
  NonRealProbability,
  RemovedVertex,
  FillFailure,
  Singular,
  ConditioningTooRare,
  NoConvergence,
  InvalidArgument,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lgf
