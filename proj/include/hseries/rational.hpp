#pragma once

// Exact integer and rational arithmetic (GMP) plus the exact binomial
// helpers used by the finite identities.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hseries {

using BigInt = mpz_class;
/// Always held in lowest terms with a positive denominator.
using BigRational = mpq_class;

/// p/q reduced to lowest terms. Throws DomainError when q == 0.
BigRational make_rational(const BigInt& p, const BigInt& q);
inline BigRational make_rational(long p, long q) { return make_rational(BigInt(p), BigInt(q)); }

bool is_integer(const BigRational& q);
/// Value as long; requires an integer that fits.
long to_long(const BigRational& q);

/// Integer binomial coefficient C(n, k); zero unless 0 <= k <= n.
BigInt binomial(long n, long k);

/// Generalized binomial C(u, k) = u (u-1) ... (u-k+1) / k! for integer k;
/// zero for k < 0.
BigRational binomial(const BigRational& u, long k);

/// 2^e for any integer e.
BigRational pow2(long e);
BigRational pow(const BigRational& base, long e);

/// Parses "p", "p/q" or a finite decimal ("0.25", "-1.5e-3") exactly.
std::optional<BigRational> parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& q);

}  // namespace hseries
