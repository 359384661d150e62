#include "hseries/real.hpp"

#include <cmath>
#include <string>

#include "hseries/errors.hpp"

namespace hseries {

namespace {

thread_local mpfr_prec_t g_working_precision = 128;

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

}  // namespace

mpfr_prec_t working_precision() noexcept { return g_working_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_working_precision) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw DomainError("precision out of range: " + std::to_string(bits));
  }
  g_working_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

Real::Real() {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(int x) : Real(long{x}) {}

Real::Real(long x) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_si(value_, x, kRound);
}

Real::Real(unsigned long x) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_ui(value_, x, kRound);
}

Real::Real(long long x) : Real(static_cast<long>(x)) {}

Real::Real(double x) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_d(value_, x, kRound);
}

Real::Real(const mpz_class& x) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_z(value_, x.get_mpz_t(), kRound);
}

Real::Real(const mpq_class& x) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_q(value_, x.get_mpq_t(), kRound);
}

Real Real::parse(std::string_view text) {
  Real r;
  std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) mpfr_strtofr(r.value_, owned.c_str(), &end, 10, kRound);
  if (owned.empty() || end != owned.c_str() + owned.size() || !r.is_finite()) {
    throw ParseError("not a decimal number: '" + owned + "'");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (value_[0]._mpfr_d == nullptr) {
      mpfr_init2(value_, mpfr_get_prec(other.value_));
    } else if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    }
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(value_[0], other.value_[0]);
  return *this;
}

Real::~Real() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}
Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRound);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRound);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}
Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.value_, value_, kRound);
  return r;
}

#define HSERIES_BINARY(op, fn)                          \
  Real operator op(const Real& a, const Real& b) {      \
    Real r;                                             \
    fn(r.get(), a.get(), b.get(), kRound);              \
    return r;                                           \
  }
HSERIES_BINARY(+, mpfr_add)
HSERIES_BINARY(-, mpfr_sub)
HSERIES_BINARY(*, mpfr_mul)
HSERIES_BINARY(/, mpfr_div)
#undef HSERIES_BINARY

Real operator+(const Real& a, long b) {
  Real r;
  mpfr_add_si(r.get(), a.get(), b, kRound);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r;
  mpfr_sub_si(r.get(), a.get(), b, kRound);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r;
  mpfr_mul_si(r.get(), a.get(), b, kRound);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r;
  mpfr_div_si(r.get(), a.get(), b, kRound);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
  Real r;
  mpfr_si_sub(r.get(), a, b.get(), kRound);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
  Real r;
  mpfr_si_div(r.get(), a, b.get(), kRound);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) == 0; }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) < 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) > 0; }

#define HSERIES_UNARY(name, fn)          \
  Real name(const Real& x) {             \
    Real r;                              \
    fn(r.get(), x.get(), kRound);        \
    return r;                            \
  }
HSERIES_UNARY(abs, mpfr_abs)
HSERIES_UNARY(sqrt, mpfr_sqrt)
HSERIES_UNARY(exp, mpfr_exp)
HSERIES_UNARY(log, mpfr_log)
HSERIES_UNARY(log1p, mpfr_log1p)
HSERIES_UNARY(sin, mpfr_sin)
HSERIES_UNARY(cos, mpfr_cos)
#undef HSERIES_UNARY

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r;
  mpfr_round(r.get(), x.get());
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r;
  mpfr_pow(r.get(), base.get(), exponent.get(), kRound);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r;
  mpfr_pow_si(r.get(), base.get(), exponent, kRound);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), kRound);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), kRound);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, kRound);
  return r;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

long exponent(const Real& x) {
  if (x.is_zero()) return -(1L << 40);
  return mpfr_get_exp(x.get());
}

Real epsilon() {
  Real r(1L);
  return ldexp(r, 1 - static_cast<long>(working_precision()));
}

Real const_pi() {
  Real r;
  mpfr_const_pi(r.get(), kRound);
  return r;
}

Real const_euler() {
  Real r;
  mpfr_const_euler(r.get(), kRound);
  return r;
}

Real const_log2() {
  Real r;
  mpfr_const_log2(r.get(), kRound);
  return r;
}

int round_trip_digits(mpfr_prec_t bits) {
  return 1 + static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120));
}

std::string to_string(const Real& x, int digits) {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, x.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string to_string(const Real& x) { return to_string(x, round_trip_digits(x.precision())); }

Real to_working_precision(const Real& x) {
  Real r;
  mpfr_set(r.get(), x.get(), kRound);
  return r;
}

}  // namespace hseries
