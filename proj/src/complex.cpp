#include "hseries/complex.hpp"

namespace hseries {

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  if (!rhs.im.is_zero()) im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  if (!rhs.im.is_zero()) im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  *this = *this * rhs;
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  *this = *this / rhs;
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  if (!im.is_zero()) im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re /= rhs;
  if (!im.is_zero()) im /= rhs;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) {
  Complex r = a;
  r += b;
  return r;
}

Complex operator-(const Complex& a, const Complex& b) {
  Complex r = a;
  r -= b;
  return r;
}

Complex operator*(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return a * b.re;
  if (a.im.is_zero()) return b * a.re;
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return a / b.re;
  // Smith's algorithm keeps the intermediate ratio bounded.
  if (abs(b.re) >= abs(b.im)) {
    Real ratio = b.im / b.re;
    Real denom = b.re + b.im * ratio;
    return {(a.re + a.im * ratio) / denom, (a.im - a.re * ratio) / denom};
  }
  Real ratio = b.re / b.im;
  Real denom = b.re * ratio + b.im;
  return {(a.re * ratio + a.im) / denom, (a.im * ratio - a.re) / denom};
}

Complex operator*(const Complex& a, const Real& b) {
  Complex r = a;
  r *= b;
  return r;
}

Complex operator*(const Real& a, const Complex& b) { return b * a; }

Complex operator/(const Complex& a, const Real& b) {
  Complex r = a;
  r /= b;
  return r;
}

Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
Complex operator*(const Complex& a, long b) {
  return {a.re * b, a.im.is_zero() ? a.im : a.im * b};
}
Complex operator/(const Complex& a, long b) {
  return {a.re / b, a.im.is_zero() ? a.im : a.im / b};
}
Complex operator+(long a, const Complex& b) { return b + a; }
Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator*(long a, const Complex& b) { return b * a; }
Complex operator/(long a, const Complex& b) { return Complex(Real(a)) / b; }

bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z) {
  if (z.im.is_zero()) return abs(z.re);
  return hypot(z.re, z.im);
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex log(const Complex& z) {
  if (z.im.is_zero()) {
    // Points on the cut take the value approached from above, whatever the sign of zero.
    if (z.re.sign() < 0) return {log(-z.re), const_pi()};
    return Complex(log(z.re));
  }
  return {log(abs(z)), arg(z)};
}

Complex exp(const Complex& z) {
  Real modulus = exp(z.re);
  if (z.im.is_zero()) return Complex(modulus);
  return {modulus * cos(z.im), modulus * sin(z.im)};
}

Complex sqr(const Complex& z) { return z * z; }

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1L)) / pow(z, -n);
  Complex result(Real(1L));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

std::string to_string(const Complex& z, int digits) {
  std::string out = to_string(z.re, digits);
  if (z.im.is_zero()) return out;
  std::string imag = to_string(z.im, digits);
  if (imag.front() != '-') out += '+';
  out += imag;
  out += 'i';
  return out;
}

std::string to_string(const Complex& z) {
  return to_string(z, round_trip_digits(std::max(z.re.precision(), z.im.precision())));
}

Complex to_working_precision(const Complex& z) {
  return {to_working_precision(z.re), to_working_precision(z.im)};
}

}  // namespace hseries
