#include "hseries/precision.hpp"

#include <cmath>
#include <string>

#include "hseries/errors.hpp"

namespace hseries {

void PrecisionContext::validate() const {
  if (mantissa_bits < 53) {
    throw DomainError("mantissa_bits must be >= 53, got " + std::to_string(mantissa_bits));
  }
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (!(target_tol > 0.0) || !std::isfinite(target_tol)) {
    throw DomainError("target_tol must be a positive finite number");
  }
}

namespace {
mpfr_prec_t validated_bits(const PrecisionContext& ctx) {
  ctx.validate();
  return static_cast<mpfr_prec_t>(ctx.mantissa_bits);
}
}  // namespace

ContextScope::ContextScope(const PrecisionContext& ctx) : scope_(validated_bits(ctx)) {}

}  // namespace hseries
