#pragma once

// Complex-argument special functions: log-Gamma, digamma, polygamma,
// the Riemann zeta function on the positive real axis, generalized binomial
// coefficients, and cached mathematical constants.
//
// All functions evaluate at the calling thread's working precision.

#include "hseries/complex.hpp"
#include "hseries/rational.hpp"
#include "hseries/real.hpp"

namespace hseries::specfun {

struct Constants {
  Real pi;
  Real euler_gamma;
  Real ln2;
  Real zeta2;  // pi^2 / 6
  Real zeta3;
  Real zeta4;  // pi^4 / 90
};

/// Constants at the working precision; computed once per precision and thread.
const Constants& constants();

/// Bernoulli number B_n (B_1 = -1/2), exact.
const BigRational& bernoulli(long n);

/// Real part below which arguments are shifted up before the asymptotic
/// expansions are applied: 8 + mantissa_bits / 8.
long asymptotic_threshold();

/// Principal branch of log Gamma, continuous off (-inf, 0].
/// Throws PoleError for z in {0, -1, -2, ...}.
Complex ln_gamma(const Complex& z);

/// psi(z) = Gamma'(z) / Gamma(z). Throws PoleError at non-positive integers.
Complex digamma(const Complex& z);

/// Largest depth accepted by digamma_log_series at the working precision.
long digamma_log_series_max_depth();

/// Partial sum through n = depth - 1 of
///   psi(z) = sum_n 1/(n+1) sum_k C(n,k) (-1)^k log(z+k),   Re z > 0.
/// Converges slowly; intended as a cross-check of digamma().
/// Throws DomainError for Re z <= 0 or depth outside [1, max_depth].
Complex digamma_log_series(const Complex& z, long depth);

/// r-th derivative of digamma; r = 0 is digamma itself.
/// Throws PoleError at non-positive integers, DomainError for r < 0.
Complex polygamma(long r, const Complex& z);

/// Riemann zeta for real s > 0, s != 1, via the accelerated alternating
/// (eta) series. Throws DomainError otherwise.
Real zeta(const Real& s);
Real zeta(long s);

/// Gamma(u+1) / (Gamma(v+1) Gamma(u-v+1)).
/// Exact integer arithmetic for non-negative integer arguments up to 10^6,
/// falling factorials when the lower index (or u - v) is a small integer,
/// log-Gamma otherwise. Returns 0 when a denominator Gamma sits on a pole,
/// throws PoleError when the value is infinite.
Complex gen_binom(const Complex& u, const Complex& v);

}  // namespace hseries::specfun
