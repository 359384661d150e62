#pragma once

// Arbitrary-precision real numbers on top of MPFR.
//
// Every newly created Real is allocated at the calling thread's working
// precision (see PrecisionScope). Binary operations produce results at the
// working precision; compound assignment rounds to the target's precision.

#include <cstdio>

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace hseries {

/// Working precision (mantissa bits) for the calling thread.
mpfr_prec_t working_precision() noexcept;

/// RAII guard that sets the calling thread's working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(int x);
  Real(long x);
  Real(unsigned long x);
  Real(long long x);
  Real(double x);
  explicit Real(const mpz_class& x);
  explicit Real(const mpq_class& x);

  /// Parses a decimal literal ("1.25", "-3e-7"). Throws ParseError.
  static Real parse(std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);
inline Real operator+(const Real& a, int b) { return a + long{b}; }
inline Real operator-(const Real& a, int b) { return a - long{b}; }
inline Real operator*(const Real& a, int b) { return a * long{b}; }
inline Real operator/(const Real& a, int b) { return a / long{b}; }
inline Real operator+(int a, const Real& b) { return long{a} + b; }
inline Real operator-(int a, const Real& b) { return long{a} - b; }
inline Real operator*(int a, const Real& b) { return long{a} * b; }
inline Real operator/(int a, const Real& b) { return long{a} / b; }

bool operator==(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator>(const Real& a, const Real& b) { return b < a; }
inline bool operator<=(const Real& a, const Real& b) { return !(b < a); }
inline bool operator>=(const Real& a, const Real& b) { return !(a < b); }
bool operator==(const Real& a, long b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);
inline bool operator<=(const Real& a, long b) { return !(a > b); }
inline bool operator>=(const Real& a, long b) { return !(a < b); }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real round(const Real& x);
/// x * 2^e
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/// Binary exponent e with 0.5 <= |x| / 2^e < 1; zero maps to a very negative value.
long exponent(const Real& x);

/// x rounded to the working precision.
Real to_working_precision(const Real& x);

/// 2^(1 - working precision).
Real epsilon();

Real const_pi();
Real const_euler();
Real const_log2();

/// Digits needed so that parsing the printed value recovers it exactly.
int round_trip_digits(mpfr_prec_t bits);

/// Scientific notation with `digits` significant digits ("1.25e+00").
std::string to_string(const Real& x, int digits);
/// Scientific notation with enough digits to round-trip at x's precision.
std::string to_string(const Real& x);

}  // namespace hseries
