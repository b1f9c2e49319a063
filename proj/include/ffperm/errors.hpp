#pragma once

#include <stdexcept>
#include <string>

namespace ffperm {

enum class Errc {
  NotIrreducible,
  NoTableEntry,
  BadFieldSpec,
  DivisionByZero,
  NotInSubfield,
  BadTower,
  BadOrder,
  ZeroPolynomial,
  DivisionByZeroPoly,
  BothZero,
  DegenerateMap,
  SplitFailure,
  ConstantMap,
  DegreeTooHigh,
  BetaNotInFqStar,
  ENonzeroViolated,
  HypothesisViolated,
  BadResidue,
  B2Violated,
  MapNotStable,
  BadConjugators,
  RamMismatch,
  TableEntryFails,
  ConstraintViolated,
  BadR,
  NonExactDivision,
  SizeLimit,
  NoAdmissibleExponent,
  NoAdmissibleLambda,
  BudgetExceeded,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
  {
  }

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ffperm
