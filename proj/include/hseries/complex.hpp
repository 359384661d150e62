#pragma once

#include <string>

#include "hseries/real.hpp"

namespace hseries {

/// Complex number with arbitrary-precision components.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real real) : re(std::move(real)) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  Complex(int x) : re(x) {}
  Complex(long x) : re(x) {}
  Complex(double x) : re(x) {}

  bool is_real() const noexcept { return im.is_zero(); }
  bool is_finite() const noexcept { return re.is_finite() && im.is_finite(); }
  /// True for 0, -1, -2, ... (poles of Gamma).
  bool is_nonpositive_integer() const { return is_real() && re.is_integer() && re <= 0L; }
  /// True for real integer values.
  bool is_integer() const { return is_real() && re.is_integer(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);

  Complex operator-() const { return {-re, -im}; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
Complex operator+(long a, const Complex& b);
Complex operator-(long a, const Complex& b);
Complex operator*(long a, const Complex& b);
Complex operator/(long a, const Complex& b);
inline Complex operator+(const Complex& a, int b) { return a + long{b}; }
inline Complex operator-(const Complex& a, int b) { return a - long{b}; }
inline Complex operator*(const Complex& a, int b) { return a * long{b}; }
inline Complex operator/(const Complex& a, int b) { return a / long{b}; }
inline Complex operator+(int a, const Complex& b) { return long{a} + b; }
inline Complex operator-(int a, const Complex& b) { return long{a} - b; }
inline Complex operator*(int a, const Complex& b) { return long{a} * b; }
inline Complex operator/(int a, const Complex& b) { return long{a} / b; }

bool operator==(const Complex& a, const Complex& b);
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
/// Principal branch, cut along (-inf, 0].
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex sqr(const Complex& z);
Complex pow(const Complex& z, long n);
/// exp(w * log(z)) with the principal logarithm.
Complex pow(const Complex& z, const Complex& w);

/// Both components rounded to the working precision.
Complex to_working_precision(const Complex& z);

/// "a", "a+bi" or "a-bi" in scientific notation; digits as for Real.
std::string to_string(const Complex& z, int digits);
std::string to_string(const Complex& z);

}  // namespace hseries
