#include "hseries/specfun.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <string>

#include "hseries/errors.hpp"

namespace hseries::specfun {

namespace {

constexpr long kExactBinomialLimit = 1'000'000;
constexpr long kFallingFactorialLimit = 64;
constexpr long kMaxAsymptoticTerms = 2000;

std::string describe(const Complex& z) { return to_string(z, 12); }

// Number of unit shifts that moves Re(z) to at least the asymptotic threshold.
long shift_count(const Complex& z) {
  Real gap = Real(asymptotic_threshold()) - z.re;
  if (gap <= 0L) return 0;
  Real n = floor(gap) + 1L;
  if (n > 100'000'000L) throw DomainError("argument too far left of the real axis: " + describe(z));
  return n.to_long();
}

Complex ln_gamma_asymptotic(const Complex& w) {
  const Constants& c = constants();
  Complex result = (w - Complex(Real(0.5))) * log(w) - w + Complex(log(c.pi * 2L) / 2L);
  const Complex inv = Complex(Real(1L)) / w;
  const Complex inv2 = inv * inv;
  const Real tol = epsilon() * max(Real(1L), abs(result));
  Complex power = inv;
  for (long k = 1; k < kMaxAsymptoticTerms; ++k) {
    Complex term = power * Real(bernoulli(2 * k) / BigRational(2 * k * (2 * k - 1)));
    result += term;
    if (abs(term) <= tol) return result;
    power *= inv2;
  }
  throw ConvergenceError("log-Gamma asymptotic series did not converge at " + describe(w));
}

Complex digamma_asymptotic(const Complex& w) {
  const Complex inv = Complex(Real(1L)) / w;
  const Complex inv2 = inv * inv;
  Complex result = log(w) - inv / 2L;
  const Real tol = epsilon() * max(Real(1L), abs(result));
  Complex power = inv2;
  for (long k = 1; k < kMaxAsymptoticTerms; ++k) {
    Complex term = power * Real(bernoulli(2 * k) / BigRational(2 * k));
    result -= term;
    if (abs(term) <= tol) return result;
    power *= inv2;
  }
  throw ConvergenceError("digamma asymptotic series did not converge at " + describe(w));
}

// psi^(r)(w) for r >= 1 and large Re(w):
//   (-1)^(r+1) [ (r-1)!/w^r + r!/(2 w^(r+1)) + sum_k B_2k (2k+r-1)!/(2k)! / w^(2k+r) ]
Complex polygamma_asymptotic(long r, const Complex& w) {
  const Complex inv = Complex(Real(1L)) / w;
  const Complex inv2 = inv * inv;
  Real fact_rm1(1L);
  for (long i = 2; i < r; ++i) fact_rm1 *= i;
  const Real fact_r = fact_rm1 * r;
  Complex inv_r = pow(inv, r);
  Complex result = inv_r * fact_rm1 + inv_r * inv * fact_r / 2L;
  const Real tol = epsilon() * abs(result);
  Complex power = inv_r * inv2;
  for (long k = 1; k < kMaxAsymptoticTerms; ++k) {
    Real coeff(bernoulli(2 * k));
    for (long i = 1; i <= r - 1; ++i) coeff *= 2 * k + i;  // (2k+r-1)!/(2k)!
    Complex term = power * coeff;
    result += term;
    if (abs(term) <= tol) return r % 2 == 1 ? result : -result;
    power *= inv2;
  }
  throw ConvergenceError("polygamma asymptotic series did not converge at " + describe(w));
}

void require_not_pole(const Complex& z, const char* what) {
  if (z.is_nonpositive_integer()) {
    throw PoleError(std::string(what) + " has a pole at " + describe(z));
  }
}

Complex falling_factorial_binom(const Complex& u, long k) {
  Complex num(Real(1L));
  Real den(1L);
  for (long i = 0; i < k; ++i) {
    num *= u - i;
    den *= i + 1;
  }
  return num / den;
}

bool small_nonnegative_integer(const Complex& x, long limit) {
  return x.is_integer() && x.re >= 0L && x.re <= limit;
}

}  // namespace

const Constants& constants() {
  thread_local std::map<mpfr_prec_t, Constants> cache;
  const mpfr_prec_t bits = working_precision();
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  Constants c;
  c.pi = const_pi();
  c.euler_gamma = const_euler();
  c.ln2 = const_log2();
  Real pi2 = c.pi * c.pi;
  c.zeta2 = pi2 / 6L;
  c.zeta4 = pi2 * pi2 / 90L;
  c.zeta3 = zeta(3L);
  return cache.emplace(bits, std::move(c)).first->second;
}

const BigRational& bernoulli(long n) {
  static std::mutex mutex;
  static std::deque<BigRational> table{BigRational(1)};
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    BigRational value = 0;
    if (m == 1 || m % 2 == 0) {
      // sum_{k=0}^{m} C(m+1, k) B_k = 0
      BigRational acc = 0;
      for (long k = 0; k < m; ++k) {
        if (k > 1 && k % 2 == 1) continue;
        acc += BigRational(binomial(m + 1, k)) * table[static_cast<std::size_t>(k)];
      }
      value = -acc / BigRational(m + 1);
    }
    table.push_back(value);
  }
  return table[static_cast<std::size_t>(n)];
}

long asymptotic_threshold() { return 8 + static_cast<long>(working_precision()) / 8; }

Complex ln_gamma(const Complex& z) {
  require_not_pole(z, "log-Gamma");
  const long n = shift_count(z);
  Complex shifted_logs;
  for (long k = 0; k < n; ++k) shifted_logs += log(z + k);
  return ln_gamma_asymptotic(z + n) - shifted_logs;
}

Complex digamma(const Complex& z) {
  require_not_pole(z, "digamma");
  const long n = shift_count(z);
  Complex reciprocal_sum;
  for (long k = 0; k < n; ++k) reciprocal_sum += Complex(Real(1L)) / (z + k);
  return digamma_asymptotic(z + n) - reciprocal_sum;
}

long digamma_log_series_max_depth() { return 60 * static_cast<long>(working_precision()) / 53; }

Complex digamma_log_series(const Complex& z, long depth) {
  if (z.re <= 0L) throw DomainError("log series for digamma requires Re z > 0, got " + describe(z));
  const long cap = digamma_log_series_max_depth();
  if (depth < 1 || depth > cap) {
    throw DomainError("depth must lie in [1, " + std::to_string(cap) + "], got " +
                      std::to_string(depth));
  }
  std::vector<Complex> logs;
  logs.reserve(static_cast<std::size_t>(depth));
  for (long k = 0; k < depth; ++k) logs.push_back(log(z + k));
  Complex total;
  for (long n = 0; n < depth; ++n) {
    Complex inner;
    for (long k = 0; k <= n; ++k) {
      Complex term = logs[static_cast<std::size_t>(k)] * Real(binomial(n, k));
      if (k % 2 == 0) inner += term; else inner -= term;
    }
    total += inner / (n + 1);
  }
  return total;
}

Complex polygamma(long r, const Complex& z) {
  if (r < 0) throw DomainError("polygamma order must be non-negative");
  if (r == 0) return digamma(z);
  require_not_pole(z, "polygamma");
  const long n = shift_count(z);
  Complex power_sum;
  for (long k = 0; k < n; ++k) power_sum += pow(z + k, -(r + 1));
  Real fact_r(1L);
  for (long i = 2; i <= r; ++i) fact_r *= i;
  // psi^(r)(z) = psi^(r)(z+n) - (-1)^r r! sum_{k<n} (z+k)^-(r+1)
  Complex correction = power_sum * fact_r;
  Complex result = polygamma_asymptotic(r, z + n);
  if (r % 2 == 0) result -= correction; else result += correction;
  return result;
}

Real zeta(const Real& s) {
  if (s <= 0L || s == 1L) {
    throw DomainError("zeta(s) is implemented for real s > 0, s != 1; got " + to_string(s, 12));
  }
  // Cohen-Villegas-Zagier acceleration of eta(s) = sum_k (-1)^k / (k+1)^s.
  const long n = static_cast<long>(working_precision() * 0.3933) + 4;
  Real d = pow(Real(3L) + sqrt(Real(8L)), n);
  d = (d + 1L / d) / 2L;
  Real b(-1L);
  Real c = -d;
  Real sum;
  const bool integer_s = s.is_integer() && s < 1'000'000L;
  for (long k = 0; k < n; ++k) {
    c = b - c;
    Real term = integer_s ? pow(Real(k + 1), -s.to_long()) : exp(-s * log(Real(k + 1)));
    sum += c * term;
    b = b * ((k + n) * (k - n)) * 2L / ((2 * k + 1) * (k + 1));
  }
  Real eta = sum / d;
  Real one_minus = 1L - pow(Real(2L), 1L - s);
  return eta / one_minus;
}

Real zeta(long s) { return zeta(Real(s)); }

Complex gen_binom(const Complex& u, const Complex& v) {
  if (u.is_integer() && v.is_integer()) {
    if (v.re < 0L) return Complex();
    if (v.re <= kExactBinomialLimit) {
      const long k = v.re.to_long();
      if (u.re >= 0L && u.re <= kExactBinomialLimit) {
        return Complex(Real(binomial(u.re.to_long(), k)));
      }
      if (u.re < 0L && u.re >= -kExactBinomialLimit) {
        // C(-a, k) = (-1)^k C(a + k - 1, k)
        BigInt magnitude = binomial(-u.re.to_long() + k - 1, k);
        return Complex(Real(k % 2 == 0 ? magnitude : BigInt(-magnitude)));
      }
    }
  }
  if (v.is_integer()) {
    if (v.re < 0L) return Complex();
    if (v.re <= kFallingFactorialLimit) return falling_factorial_binom(u, v.re.to_long());
  }
  const Complex diff = u - v;
  if (small_nonnegative_integer(diff, kFallingFactorialLimit)) {
    return falling_factorial_binom(u, diff.re.to_long());
  }
  const Complex a = u + 1L;
  const Complex b = v + 1L;
  const Complex c = diff + 1L;
  if (a.is_nonpositive_integer()) {
    throw PoleError("binomial(" + describe(u) + ", " + describe(v) + ") is infinite");
  }
  if (b.is_nonpositive_integer() || c.is_nonpositive_integer()) return Complex();
  Complex result = exp(ln_gamma(a) - ln_gamma(b) - ln_gamma(c));
  if (u.is_real() && v.is_real()) result.im = Real();
  return result;
}

}  // namespace hseries::specfun
