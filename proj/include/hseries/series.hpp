#pragma once

// Term generation, compensated partial sums, tail estimation and limit
// extrapolation for the inverse-binomial series families.
//
// A series is sum_{n>=1} kernel(n) * weight(n) / D(n) where D is a product of
// shifted linear factors and the kernel is either 1/C(n+z, n) (general z) or
// 4^n / (C(2(n+m), n+m) C(n+m, m)) (half-integer m, the z = m - 1/2 case up
// to the factor 1/C(2m, m)).

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hseries/complex.hpp"
#include "hseries/precision.hpp"

namespace hseries::series {

/// Denominator D(n): P2 = n^2, P12 = n(n+1), P13 = n(n+2), P14 = n(n+3),
/// P123 = n(n+1)(n+2), P1234 = n(n+1)(n+2)(n+3), N3 = n^3, N4 = n^4.
enum class Family { P2, P12, P13, P14, P123, P1234, N3, N4 };

const std::vector<long>& shifts(Family f);
std::string to_string(Family f);

/// Weight w(n), with x = z (general) or x = m - 1/2 (half-integer):
///   One     1
///   HShift  H_{n+x}                                   general only
///   HDiff   H_{n+x} - H_x                             general only
///   QDiff   (H_{n+x} - H_x)^2 + H_{n+x}^(2) - H_x^(2) general only
///   OShift  O_{n+m}                                   half-integer only
///   QOdd    (O_{n+m} - O_m)^2 + O_{n+m}^(2) - O_m^(2) half-integer only
///   HPlain  H_n^(order)
struct Weight {
  enum class Kind { One, HShift, HDiff, QDiff, OShift, QOdd, HPlain };
  Kind kind = Kind::One;
  long order = 1;  // HPlain only

  static Weight one() { return {}; }
  static Weight plain(long order) { return {Kind::HPlain, order}; }
};
std::string to_string(const Weight& w);

struct GeneralArg {
  Complex z;
};
struct HalfIntegerArg {
  long m = 0;
};

struct SeriesSpec {
  Family family = Family::P2;
  Weight weight;
  std::variant<GeneralArg, HalfIntegerArg> argument = GeneralArg{};

  bool is_half_integer() const { return std::holds_alternative<HalfIntegerArg>(argument); }
  /// z for general arguments, m - 1/2 for half-integer ones.
  Complex effective_z() const;
  /// Throws DomainError for Re(z) <= -1, m < 0, HPlain order < 1, or a
  /// weight that does not match the argument kind.
  void validate() const;
};
std::string to_string(const SeriesSpec& spec);

/// 1/C(n+z, n): direct product for n <= 50, log-Gamma beyond, exact for integer z.
Complex general_kernel(const Complex& z, long n);
/// 4^n / (C(2(n+m), n+m) C(n+m, m)): exact for n + m <= 50, log-Gamma beyond.
Real half_integer_kernel(long m, long n);

/// Summand at index n >= 1, computed independently of its neighbours.
Complex term(const SeriesSpec& spec, long n);

/// Neumaier-compensated accumulation of complex values.
class CompensatedSum {
 public:
  void add(const Complex& x);
  Complex value() const;

 private:
  Real sum_re_, comp_re_, sum_im_, comp_im_;
};

/// Streams t_1, t_2, ... using the kernel ratio and running harmonic sums, so
/// that each step costs O(1). Values are carried at the precision in force
/// when the stream is created.
class TermStream {
 public:
  explicit TermStream(const SeriesSpec& spec);
  /// Advances to the next index and returns its term.
  const Complex& next();
  long index() const { return n_; }

 private:
  SeriesSpec spec_;
  Complex x_;
  Complex kernel_;
  Complex seed_;  // H_z or O_m
  Complex a1_, a2_;
  Real plain_;
  Complex current_;
  long n_ = 0;
};

/// sum_{n=1}^N term(n) with compensated accumulation.
Complex partial_sum(const SeriesSpec& spec, long N);

/// Estimate of |sum_{n>N} term(n)|: fits |t_n| ~ C n^-p (ln n)^q on n = N-7..N with
/// q fixed by the weight's logarithmic degree, integrates the fit from N+1 to
/// infinity and multiplies by 4. EstimateUnavailable when |t_n| is not strictly
/// decreasing there or the fitted p <= 1; DomainError for N < 9.
Real tail_estimate(const SeriesSpec& spec, long N);

/// Same estimate from the magnitudes of the eight terms ending at index N.
Real tail_estimate_from_terms(const std::vector<Real>& magnitudes, long N, long log_degree);

/// Highest power of ln n appearing in the term asymptotics (0, 1 or 2).
long log_degree(const SeriesSpec& spec);

struct SumResult {
  Complex value;
  std::size_t terms_used = 0;
  Real tail_estimate;
  bool accelerated = false;
  Real achieved_tol;
};

/// Sums the series to relative accuracy ctx.target_tol. Partial sums are
/// accepted directly when the tail estimate is small enough; otherwise the
/// limit is extrapolated from partial sums on a geometric grid by fitting
///   S_N = S + sum_{k<=K, j<=L} c_kj N^-(alpha+k) (ln N)^j
/// with alpha the leading tail exponent. The achieved tolerance is the change
/// of the extrapolated limit when the sample window is halved.
/// Throws DomainError for invalid specs and ConvergenceError when max_terms is
/// exhausted.
SumResult sum_to_tolerance(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Limit of a sequence of partial sums: Levin u-transform, with polynomial
/// (Richardson) extrapolation in 1/n as fallback. DomainError for fewer than 8
/// values; AccelerationDiverged when neither transform settles within
/// ctx.target_tol.
Complex accelerate(const std::vector<Complex>& partials, const PrecisionContext& ctx);

}  // namespace hseries::series
