#pragma once

// Harmonic, generalized harmonic and odd harmonic numbers, plus the finite
// identities used to build the infinite-series closed forms.

#include <array>

#include "hseries/complex.hpp"
#include "hseries/rational.hpp"

namespace hseries::harmonic {

/// H_z = psi(z+1) + gamma. PoleError for negative integers.
Complex harmonic(const Complex& z);

/// H_z^(m) = zeta(m) + (-1)^(m-1)/(m-1)! psi^(m-1)(z+1); m = 1 is harmonic(z).
/// DomainError for m < 1, PoleError for negative integers.
Complex gen_harmonic(long m, const Complex& z);

/// O_n^(m) = sum_{j=1}^n (2j-1)^-m, exact.
BigRational odd_harmonic(long m, long n);

/// H_n^(m) = sum_{j=1}^n j^-m, exact.
BigRational exact_gen_harmonic(long m, long n);

/// H_{k-1/2}^(m) for m in 1..4 from odd harmonic numbers and the fixed values
///   H_{-1/2} = -2 ln 2, H_{-1/2}^(2) = -2 zeta(2),
///   H_{-1/2}^(3) = -6 zeta(3), H_{-1/2}^(4) = -14 zeta(4).
/// DomainError for other m or k < 0.
Complex half_integer_harmonic(long m, long k);

/// Exact linear form c0 + c1 ln2 + c2 zeta(2) + c3 zeta(3) + c4 zeta(4).
struct ConstantForm {
  std::array<BigRational, 5> coeff{};

  static const std::array<const char*, 5>& basis_names();
  Real evaluate() const;
  bool operator==(const ConstantForm&) const = default;
};

/// H_{k-1/2}^(m) as an exact form, obtained from H_{-1/2}^(m) = (2 - 2^m) zeta(m)
/// (m >= 2; -2 ln 2 for m = 1) and H_a^(m) = H_{a-1}^(m) + a^-m.
/// Serves as the independent side of the half-integer relations.
ConstantForm half_integer_harmonic_form(long m, long k);

/// sum_{k=1}^m 1/C(k+n, k). DomainError for n in {0, 1} or m < 1.
BigRational finite_binom_sum(long m, const BigRational& n);
Complex finite_binom_sum(long m, const Complex& n);
/// 1/(n-1) - n/(n-1) / C(m+n, m+1)
BigRational finite_binom_sum_closed(long m, const BigRational& n);
Complex finite_binom_sum_closed(long m, const Complex& n);

/// sum_{k=1}^n C(n,k) (-1)^(k-1) k/(z+k). PoleError if some z+k = 0.
BigRational frisch_sum(long n, const BigRational& z);
Complex frisch_sum(long n, const Complex& z);
/// 1/C(n+z, n)
BigRational frisch_closed(long n, const BigRational& z);
Complex frisch_closed(long n, const Complex& z);

/// sum_{z=1}^r z^j H_z^(2) for j in {0, 1, 2}, by direct summation.
BigRational weighted_h2_sum(int j, long r);
/// The same sums in closed form:
///   j=0: (r+1) H_r^(2) - H_r
///   j=1: (r(r+1) H_r^(2) + H_r - r) / 2
///   j=2: r(r+1)(2r+1)/6 H_r^(2) - H_r/6 + r/3 - r^2/6
BigRational weighted_h2_closed(int j, long r);

/// The six half-integer binomial evaluations.
///   A  C(u-1/2, v)   = C(2u,u) C(u,v) 2^-2v / C(2(u-v), u-v)        u >= v >= 0
///   B  C(u, 1/2)     = 2^(2u+1) / (pi C(2u,u))                       u >= 0
///   C  C(u, 1/2-v)   = (-1)^(v-1)/v 2^(2u+2) C(2(v-1),v-1)
///                      / (pi C(u+v,v) C(2(u+v),u+v))                 u >= 0, v >= 1
///   D  C(u+1/2, v)   = C(2u+1, 2v) 2^-2v C(2v,v) / C(u,v)            u >= v >= 0
///   E  C(u+1/2, v)   = (-1)^(v-u-1) 2^(1-2v) (2u+1)/(v-u)
///                      C(2u,u) C(2(v-u-1),v-u-1) / C(v,u)            v > u >= 0
///   F  C(-3/2, u)    = (-1)^u (2u+1) 2^-2u C(2u,u)                   u >= 0
/// v is ignored for B and F.
enum class BinomCase { A, B, C, D, E, F };

/// Parses "A".."F" (case-insensitive). ParseError otherwise.
BinomCase parse_binom_case(std::string_view text);
char to_char(BinomCase c);

struct BinomPair {
  Complex lhs;  // gen_binom at the half-integer arguments
  Complex rhs;  // integer binomials, powers of two, pi
};

/// DomainError when (u, v) is outside the case's range.
BinomPair half_integer_binom(BinomCase c, long u, long v);

/// Exact values of both sides as rational multiples of pi^pi_power
/// (pi_power = -1 for B and C, 0 otherwise). The left side is evaluated from
/// the Gamma function at integers and half-integers, the right side from the
/// closed form above.
struct ExactBinomPair {
  BigRational lhs;
  BigRational rhs;
  long pi_power = 0;
};
ExactBinomPair half_integer_binom_exact(BinomCase c, long u, long v);

}  // namespace hseries::harmonic
