#pragma once

#include <cstddef>

#include "hseries/real.hpp"

namespace hseries {

/// Numeric settings shared by every operation in a computation.
struct PrecisionContext {
  long mantissa_bits = 128;
  std::size_t max_terms = 2'000'000;
  /// Relative tolerance requested from series summation and verification.
  double target_tol = 1e-10;

  /// Throws DomainError unless mantissa_bits >= 53, max_terms >= 1 and target_tol > 0.
  void validate() const;
};

/// Validates `ctx` and makes its precision the working precision for the scope.
class ContextScope {
 public:
  explicit ContextScope(const PrecisionContext& ctx);

 private:
  PrecisionScope scope_;
};

}  // namespace hseries
