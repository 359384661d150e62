#include "hseries/rational.hpp"

#include <cctype>
#include <limits>

#include "hseries/errors.hpp"

namespace hseries {

BigRational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

long to_long(const BigRational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw DomainError("expected an integer, got " + to_string(q));
  }
  return q.get_num().get_si();
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigRational binomial(const BigRational& u, long k) {
  if (k < 0) return 0;
  BigRational num = 1;
  BigInt den = 1;
  for (long i = 0; i < k; ++i) {
    num *= u - i;
    den *= i + 1;
  }
  return num / BigRational(den);
}

BigRational pow2(long e) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

BigRational pow(const BigRational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return 1 / pow(base, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

namespace {

std::optional<BigInt> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::optional<BigRational> parse_decimal(std::string_view s) {
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string mantissa;
  long scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa += c;
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return std::nullopt;
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return std::nullopt;
    auto e = parse_integer(s.substr(i + 1));
    if (!e || !e->fits_slong_p()) return std::nullopt;
    exp10 = e->get_si();
  }
  BigInt num(mantissa, 10);
  if (negative) num = -num;
  long power = exp10 - scale;
  if (power > 10000 || power < -10000) return std::nullopt;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(power < 0 ? -power : power));
  return power < 0 ? make_rational(num, ten_pow) : BigRational(num * ten_pow);
}

}  // namespace

std::optional<BigRational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto p = parse_integer(text.substr(0, slash));
    auto q = parse_integer(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return make_rational(*p, *q);
  }
  return parse_decimal(text);
}

std::string to_string(const BigRational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace hseries
