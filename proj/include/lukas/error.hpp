#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lukas {

enum class Errc {
  PrefixBelowAxis,
  NonzeroEndHeight,
  StepOutsideFamily,
  MalformedPath,
  LengthMismatch,
  UnknownName,
  ResourceLimit,
  UnsupportedPattern,
  InvalidPositionSet,
  InvariantViolation,
  NonUnitConstantTerm,
  NotDivisible,
  NonIntegral,
  NoClosedForm,
  UnsupportedTag,
  NonConvergence,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries a code and, where it makes
// sense, the offending position / value / coefficient index.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, long long value = 0)
      : std::runtime_error(std::move(message)), code_(code), value_(value) {}

  Errc code() const noexcept { return code_; }
  long long value() const noexcept { return value_; }

 private:
  Errc code_;
  long long value_;
};

}  // namespace lukas
