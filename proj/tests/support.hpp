#pragma once

// Shared helpers for the test binaries: error measures and independent
// oracles taken straight from MPFR's own special functions.

#include <mpfr.h>

#include <cmath>
#include <ostream>
#include <string>

#include "hseries/complex.hpp"
#include "hseries/rational.hpp"
#include "hseries/precision.hpp"
#include "hseries/real.hpp"

namespace hseries {
// Readable gtest failure messages.
inline void PrintTo(const Real& x, std::ostream* os) { *os << to_string(x, 6); }
inline void PrintTo(const Complex& z, std::ostream* os) { *os << to_string(z, 6); }
}  // namespace hseries

namespace hseries::testing {

inline Real rel_error(const Complex& got, const Complex& want) {
  Real d = abs(got - want);
  Real s = abs(want);
  return s.is_zero() ? d : d / s;
}

inline Real rel_error(const Real& got, const Real& want) { return rel_error(Complex(got), Complex(want)); }

inline Real Q(long p, long q = 1) { return Real(make_rational(p, q)); }

inline Real mpfr_lngamma_of(const Real& x) {
  Real r;
  mpfr_lngamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real mpfr_digamma_of(const Real& x) {
  Real r;
  mpfr_digamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real mpfr_zeta_of(long s) {
  Real r;
  mpfr_zeta_ui(r.get(), static_cast<unsigned long>(s), MPFR_RNDN);
  return r;
}

}  // namespace hseries::testing
