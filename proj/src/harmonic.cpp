#include "hseries/harmonic.hpp"

#include <cctype>
#include <string>

#include "hseries/errors.hpp"
#include "hseries/specfun.hpp"

namespace hseries::harmonic {

using specfun::constants;

namespace {

void require_not_negative_integer(const Complex& z) {
  if (z.is_integer() && z.re < 0L) {
    throw PoleError("harmonic numbers are undefined at negative integers, got " + to_string(z, 12));
  }
}

BigRational inverse_power(const BigRational& x, long m) { return pow(x, -m); }

// Falling-factorial binomial C(u, k) in complex arithmetic.
Complex falling_binom(const Complex& u, long k) {
  Complex num(1L);
  Real den(1L);
  for (long i = 0; i < k; ++i) {
    num *= u - i;
    den *= i + 1;
  }
  return num / den;
}

void check_bs_domain(long m, bool n_is_zero_or_one) {
  if (m < 1) throw DomainError("finite binomial sum needs m >= 1");
  if (n_is_zero_or_one) throw DomainError("finite binomial sum is undefined for n in {0, 1}");
}

BigRational factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(r);
}

BigRational central(long n) { return BigRational(binomial(2 * n, n)); }

// Gamma(a/2) = coeff * sqrt(pi)^sqrt_pi_power.
struct HalfGamma {
  BigRational coeff;
  long sqrt_pi_power = 0;
};

std::optional<HalfGamma> half_gamma(long twice_x) {
  if (twice_x % 2 == 0) {
    const long n = twice_x / 2;
    if (n <= 0) return std::nullopt;
    return HalfGamma{factorial(n - 1), 0};
  }
  const long k = (twice_x - 1) / 2;  // x = k + 1/2
  if (k >= 0) return HalfGamma{factorial(2 * k) / (pow2(2 * k) * factorial(k)), 1};
  const long j = -k;
  BigRational c = pow2(2 * j) * factorial(j) / factorial(2 * j);
  if (j % 2 == 1) c = -c;
  return HalfGamma{c, 1};
}

// Exact C(u, v) = Gamma(u+1) / (Gamma(v+1) Gamma(u-v+1)) with u = u2/2, v = v2/2.
ExactBinomPair gamma_binom(long u2, long v2) {
  auto num = half_gamma(u2 + 2);
  if (!num) throw DomainError("binomial coefficient is infinite at these arguments");
  auto d1 = half_gamma(v2 + 2);
  auto d2 = half_gamma(u2 - v2 + 2);
  ExactBinomPair out;
  if (!d1 || !d2) return out;
  const long sqrt_pi = num->sqrt_pi_power - d1->sqrt_pi_power - d2->sqrt_pi_power;
  if (sqrt_pi % 2 != 0) throw DomainError("binomial is not a rational multiple of an integer power of pi");
  out.lhs = num->coeff / (d1->coeff * d2->coeff);
  out.pi_power = sqrt_pi / 2;
  return out;
}

void check_binom_domain(BinomCase c, long u, long v) {
  bool ok = true;
  switch (c) {
    case BinomCase::A:
    case BinomCase::D: ok = u >= v && v >= 0; break;
    case BinomCase::B:
    case BinomCase::F: ok = u >= 0; break;
    case BinomCase::C: ok = u >= 0 && v >= 1; break;
    case BinomCase::E: ok = v > u && u >= 0; break;
  }
  if (!ok) {
    throw DomainError(std::string("half-integer binomial case ") + to_char(c) +
                      " is not defined at u=" + std::to_string(u) + ", v=" + std::to_string(v));
  }
}

// Closed-form right-hand side as a rational multiple of pi^-1 (B, C) or pi^0.
BigRational binom_rhs(BinomCase c, long u, long v) {
  switch (c) {
    case BinomCase::A:
      return central(u) * BigRational(binomial(u, v)) / pow2(2 * v) / central(u - v);
    case BinomCase::B:
      return pow2(2 * u + 1) / central(u);
    case BinomCase::C: {
      BigRational r = pow2(2 * u + 2) * central(v - 1) /
                      (BigRational(v) * BigRational(binomial(u + v, v)) * central(u + v));
      return (v - 1) % 2 == 0 ? r : BigRational(-r);
    }
    case BinomCase::D:
      return BigRational(binomial(2 * u + 1, 2 * v)) * central(v) / pow2(2 * v) /
             BigRational(binomial(u, v));
    case BinomCase::E: {
      BigRational r = pow2(1 - 2 * v) * make_rational(2 * u + 1, v - u) * central(u) *
                      central(v - u - 1) / BigRational(binomial(v, u));
      return (v - u - 1) % 2 == 0 ? r : BigRational(-r);
    }
    case BinomCase::F: {
      BigRational r = BigRational(2 * u + 1) * central(u) / pow2(2 * u);
      return u % 2 == 0 ? r : BigRational(-r);
    }
  }
  return 0;
}

// Left-hand arguments doubled: (2 * upper, 2 * lower).
std::pair<long, long> binom_args(BinomCase c, long u, long v) {
  switch (c) {
    case BinomCase::A: return {2 * u - 1, 2 * v};
    case BinomCase::B: return {2 * u, 1};
    case BinomCase::C: return {2 * u, 1 - 2 * v};
    case BinomCase::D:
    case BinomCase::E: return {2 * u + 1, 2 * v};
    case BinomCase::F: return {-3, 2 * u};
  }
  return {0, 0};
}

long binom_pi_power(BinomCase c) { return c == BinomCase::B || c == BinomCase::C ? -1 : 0; }

}  // namespace

Complex harmonic(const Complex& z) {
  require_not_negative_integer(z);
  return specfun::digamma(z + 1L) + constants().euler_gamma;
}

Complex gen_harmonic(long m, const Complex& z) {
  if (m < 1) throw DomainError("harmonic order must be >= 1, got " + std::to_string(m));
  if (m == 1) return harmonic(z);
  require_not_negative_integer(z);
  Real fact(1L);
  for (long i = 2; i < m; ++i) fact *= i;
  Complex psi = specfun::polygamma(m - 1, z + 1L) / fact;
  Complex zm(specfun::zeta(m));
  return (m - 1) % 2 == 0 ? zm + psi : zm - psi;
}

BigRational odd_harmonic(long m, long n) {
  if (m < 1) throw DomainError("harmonic order must be >= 1");
  BigRational sum = 0;
  for (long j = 1; j <= n; ++j) sum += inverse_power(BigRational(2 * j - 1), m);
  return sum;
}

BigRational exact_gen_harmonic(long m, long n) {
  if (m < 1) throw DomainError("harmonic order must be >= 1");
  BigRational sum = 0;
  for (long j = 1; j <= n; ++j) sum += inverse_power(BigRational(j), m);
  return sum;
}

Complex half_integer_harmonic(long m, long k) {
  if (m < 1 || m > 4) throw DomainError("half-integer relation covers orders 1..4, got " + std::to_string(m));
  if (k < 0) throw DomainError("k must be non-negative");
  const auto& c = constants();
  Real base;
  switch (m) {
    case 1: base = -2L * c.ln2; break;
    case 2: base = -2L * c.zeta2; break;
    case 3: base = -6L * c.zeta3; break;
    default: base = -14L * c.zeta4; break;
  }
  return Complex(base + Real(pow2(m) * odd_harmonic(m, k)));
}

const std::array<const char*, 5>& ConstantForm::basis_names() {
  static const std::array<const char*, 5> names{"1", "ln2", "zeta2", "zeta3", "zeta4"};
  return names;
}

Real ConstantForm::evaluate() const {
  const auto& c = constants();
  return Real(coeff[0]) + Real(coeff[1]) * c.ln2 + Real(coeff[2]) * c.zeta2 +
         Real(coeff[3]) * c.zeta3 + Real(coeff[4]) * c.zeta4;
}

ConstantForm half_integer_harmonic_form(long m, long k) {
  if (m < 1 || m > 4) throw DomainError("half-integer form covers orders 1..4, got " + std::to_string(m));
  if (k < 0) throw DomainError("k must be non-negative");
  ConstantForm f;
  // Each (j - 1/2)^-m contributes (2/(2j-1))^m.
  for (long j = 1; j <= k; ++j) f.coeff[0] += pow(make_rational(2, 2 * j - 1), m);
  if (m == 1) {
    f.coeff[1] = -2;
  } else {
    f.coeff[static_cast<std::size_t>(m)] = 2 - pow2(m);
  }
  return f;
}

BigRational finite_binom_sum(long m, const BigRational& n) {
  check_bs_domain(m, n == 0 || n == 1);
  BigRational sum = 0;
  for (long k = 1; k <= m; ++k) {
    BigRational b = binomial(n + k, k);
    if (b == 0) throw DomainError("finite binomial sum hits a zero binomial at n=" + to_string(n));
    sum += 1 / b;
  }
  return sum;
}

Complex finite_binom_sum(long m, const Complex& n) {
  check_bs_domain(m, n == Complex(0L) || n == Complex(1L));
  Complex sum;
  for (long k = 1; k <= m; ++k) {
    Complex b = falling_binom(n + k, k);
    if (b == Complex()) throw DomainError("finite binomial sum hits a zero binomial");
    sum += Complex(1L) / b;
  }
  return sum;
}

BigRational finite_binom_sum_closed(long m, const BigRational& n) {
  check_bs_domain(m, n == 0 || n == 1);
  BigRational b = binomial(n + m, m + 1);
  if (b == 0) throw DomainError("closed form hits a zero binomial at n=" + to_string(n));
  return 1 / (n - 1) - n / (n - 1) / b;
}

Complex finite_binom_sum_closed(long m, const Complex& n) {
  check_bs_domain(m, n == Complex(0L) || n == Complex(1L));
  Complex b = falling_binom(n + m, m + 1);
  if (b == Complex()) throw DomainError("closed form hits a zero binomial");
  Complex nm1 = n - 1L;
  return Complex(1L) / nm1 - n / nm1 / b;
}

BigRational frisch_sum(long n, const BigRational& z) {
  if (n < 1) throw DomainError("frisch sum needs n >= 1");
  BigRational sum = 0;
  for (long k = 1; k <= n; ++k) {
    if (z + k == 0) throw PoleError("z + k = 0 in frisch sum");
    BigRational t = BigRational(binomial(n, k) * k) / (z + k);
    if (k % 2 == 1) sum += t; else sum -= t;
  }
  return sum;
}

Complex frisch_sum(long n, const Complex& z) {
  if (n < 1) throw DomainError("frisch sum needs n >= 1");
  Complex sum;
  for (long k = 1; k <= n; ++k) {
    Complex d = z + k;
    if (d == Complex()) throw PoleError("z + k = 0 in frisch sum");
    Complex t = Complex(Real(BigInt(binomial(n, k) * k))) / d;
    if (k % 2 == 1) sum += t; else sum -= t;
  }
  return sum;
}

BigRational frisch_closed(long n, const BigRational& z) {
  if (n < 1) throw DomainError("frisch sum needs n >= 1");
  BigRational b = binomial(z + n, n);
  if (b == 0) throw PoleError("1/C(n+z, n) is infinite");
  return 1 / b;
}

Complex frisch_closed(long n, const Complex& z) {
  if (n < 1) throw DomainError("frisch sum needs n >= 1");
  Complex b = specfun::gen_binom(z + n, Complex(n));
  if (b == Complex()) throw PoleError("1/C(n+z, n) is infinite");
  return Complex(1L) / b;
}

BigRational weighted_h2_sum(int j, long r) {
  if (j < 0 || j > 2) throw DomainError("weight exponent must be 0, 1 or 2");
  if (r < 1) throw DomainError("r must be >= 1");
  BigRational sum = 0, h2 = 0;
  for (long z = 1; z <= r; ++z) {
    h2 += make_rational(1, z * z);
    BigRational w = 1;
    for (int i = 0; i < j; ++i) w *= z;
    sum += w * h2;
  }
  return sum;
}

BigRational weighted_h2_closed(int j, long r) {
  if (j < 0 || j > 2) throw DomainError("weight exponent must be 0, 1 or 2");
  if (r < 1) throw DomainError("r must be >= 1");
  const BigRational h1 = exact_gen_harmonic(1, r);
  const BigRational h2 = exact_gen_harmonic(2, r);
  const BigRational R(r);
  switch (j) {
    case 0: return (R + 1) * h2 - h1;
    case 1: return (R * (R + 1) * h2 + h1 - R) / 2;
    default: return R * (R + 1) * (2 * R + 1) / 6 * h2 - h1 / 6 + R / 3 - R * R / 6;
  }
}

BinomCase parse_binom_case(std::string_view text) {
  if (text.size() == 1) {
    char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (ch >= 'A' && ch <= 'F') return static_cast<BinomCase>(ch - 'A');
  }
  throw ParseError("binomial case must be one of A..F, got '" + std::string(text) + "'");
}

char to_char(BinomCase c) { return static_cast<char>('A' + static_cast<int>(c)); }

BinomPair half_integer_binom(BinomCase c, long u, long v) {
  check_binom_domain(c, u, v);
  auto [u2, v2] = binom_args(c, u, v);
  const Complex upper(Real(make_rational(u2, 2)));
  const Complex lower(Real(make_rational(v2, 2)));
  BinomPair out;
  out.lhs = specfun::gen_binom(upper, lower);
  Real rhs(binom_rhs(c, u, v));
  if (binom_pi_power(c) == -1) rhs /= constants().pi;
  out.rhs = Complex(rhs);
  return out;
}

ExactBinomPair half_integer_binom_exact(BinomCase c, long u, long v) {
  check_binom_domain(c, u, v);
  auto [u2, v2] = binom_args(c, u, v);
  ExactBinomPair out = gamma_binom(u2, v2);
  if (out.lhs == 0) out.pi_power = binom_pi_power(c);
  out.rhs = binom_rhs(c, u, v);
  return out;
}

}  // namespace hseries::harmonic
