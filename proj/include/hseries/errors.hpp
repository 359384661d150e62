#pragma once

#include <stdexcept>
#include <string>

namespace hseries {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag ("PoleError", "DomainError", ...).
  virtual const char* kind() const noexcept { return "Error"; }
};

#define HSERIES_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* kind() const noexcept override { return #Name; }     \
  }

/// Argument sits on a pole of the function (non-positive integer for Gamma).
HSERIES_DEFINE_ERROR(PoleError);
/// Argument or parameter outside the declared domain.
HSERIES_DEFINE_ERROR(DomainError);
/// Series could not be summed to the requested tolerance within max_terms.
HSERIES_DEFINE_ERROR(ConvergenceError);
/// Tail estimate requested where the terms are not monotone.
HSERIES_DEFINE_ERROR(EstimateUnavailable);
/// Successive sequence-transform estimates disagree beyond tolerance.
HSERIES_DEFINE_ERROR(AccelerationDiverged);
/// Unknown identity id.
HSERIES_DEFINE_ERROR(NotFound);
/// Operation does not apply to this identity kind.
HSERIES_DEFINE_ERROR(KindError);
/// Malformed textual input.
HSERIES_DEFINE_ERROR(ParseError);

#undef HSERIES_DEFINE_ERROR

}  // namespace hseries
