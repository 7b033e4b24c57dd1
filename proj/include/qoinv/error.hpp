#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qoinv {

enum class Errc {
  // input / validation
  ParseError,
  InvalidInput,
  DimensionMismatch,
  BasisMismatch,
  NegativeExponent,
  NotStrictlyIncreasing,
  IndexOne,
  OverweightViolation,
  // lattice
  ZeroVector,
  Singular,
  NotSublattice,
  NonIntegerIndex,
  // semigroup construction
  ReductionFailure,
  NegativeRemainder,
  CrossCheckMismatch,
  BudgetExceeded,
  // ideals
  NotInAmbient,
  AmbientMismatch,
  RankDeficient,
  NotInKernel,
  GeneratorOutsideCone,
  NotProper,
  EmptySupport,
  // refusals
  UnsupportedDimension,
  NotNormalized,
  // series
  BoundMismatch,
  ZeroSeries,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qoinv
