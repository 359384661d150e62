#include "hseries/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>

#include "hseries/errors.hpp"
#include "hseries/harmonic.hpp"
#include "hseries/series.hpp"
#include "hseries/specfun.hpp"

namespace hseries::catalog {

namespace {

using series::Family;
using series::SeriesSpec;
using series::Weight;
using WK = Weight::Kind;

struct Evaluated {
  Complex value;
  std::size_t terms = 0;
  bool accelerated = false;
  Real achieved;
};

struct Entry {
  IdentityRecord record;
  std::function<void(const Params&)> check;
  std::function<Complex(const Params&)> rhs;
  std::function<Evaluated(const Params&, const PrecisionContext&)> lhs;
  std::function<ExactReport(const Params&)> exact;
};

// ---------------------------------------------------------------- parameters

const ParamValue& get(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw DomainError("missing parameter '" + name + "'");
  return it->second;
}

long get_int(const Params& p, const std::string& name) {
  const ParamValue& v = get(p, name);
  if (!v.exact || !is_integer(*v.exact) || !v.exact->get_num().fits_slong_p()) {
    throw DomainError("parameter '" + name + "' must be an integer, got " + v.text);
  }
  return to_long(*v.exact);
}

BigRational get_rational(const Params& p, const std::string& name) {
  const ParamValue& v = get(p, name);
  if (!v.exact) throw DomainError("parameter '" + name + "' must be rational for exact checks, got " + v.text);
  return *v.exact;
}

void check_names(const Params& p, const std::vector<std::string>& names) {
  for (const auto& [k, v] : p) {
    if (std::find(names.begin(), names.end(), k) == names.end()) {
      throw DomainError("unexpected parameter '" + k + "'");
    }
  }
  for (const auto& n : names) get(p, n);
}

void require_range(long v, long lo, long hi, const char* name) {
  if (v < lo || v > hi) {
    throw DomainError(std::string("parameter '") + name + "' must lie in [" + std::to_string(lo) + ", " +
                      (hi == LONG_MAX ? std::string("inf") : std::to_string(hi)) + "], got " + std::to_string(v));
  }
}

void check_z(const Params& p) {
  const Complex& z = get(p, "z").value;
  if (!z.is_finite()) throw DomainError("z must be finite");
  if (z.is_integer() && z.re < 0L) {
    throw DomainError("z = " + get(p, "z").text + " is a negative integer, outside C \\ Z^-");
  }
}

Params one(const char* name, const char* value) { return make_params({{name, value}}); }

std::vector<Params> canonical_z() {
  std::vector<Params> out;
  for (const char* z : {"0", "1/2", "1", "3/2", "2", "1/4", "0.3+0.7i"}) out.push_back(one("z", z));
  return out;
}

std::vector<Params> canonical_m() {
  std::vector<Params> out;
  for (const char* m : {"0", "1", "2", "3"}) out.push_back(one("m", m));
  return out;
}

// ---------------------------------------------------------------- values

Complex q(long a, long b = 1) { return Complex(Real(make_rational(a, b))); }

const specfun::Constants& K() { return specfun::constants(); }

Real zeta_n(long s) {
  const auto& c = K();
  switch (s) {
    case 2: return c.zeta2;
    case 3: return c.zeta3;
    case 4: return c.zeta4;
    default: return specfun::zeta(s);
  }
}

// z together with zeta(k) - H_z^(k) for k = 2..4 and H_z.
struct ZVals {
  Complex z, h1, d2, d3, d4;
  explicit ZVals(const Complex& zz) : z(zz) {
    h1 = harmonic::harmonic(z);
    d2 = Complex(K().zeta2) - harmonic::gen_harmonic(2, z);
    d3 = Complex(K().zeta3) - harmonic::gen_harmonic(3, z);
    d4 = Complex(K().zeta4) - harmonic::gen_harmonic(4, z);
  }
};

// Odd harmonic numbers of m and the central binomial C(2m, m).
struct MVals {
  Real m, o1, o2, o3, b;
  explicit MVals(long mm)
      : m(mm),
        o1(harmonic::odd_harmonic(1, mm)),
        o2(harmonic::odd_harmonic(2, mm)),
        o3(harmonic::odd_harmonic(3, mm)),
        b(binomial(2 * mm, mm)) {}
};

Evaluated sum_series(const SeriesSpec& spec, const BigRational& scale, const PrecisionContext& ctx) {
  series::SumResult r = series::sum_to_tolerance(spec, ctx);
  return {r.value * Real(scale), r.terms_used, r.accelerated, r.achieved_tol};
}

Evaluated combine(const Evaluated& a, const Evaluated& b, int sign) {
  Evaluated out;
  out.value = sign > 0 ? a.value + b.value : a.value - b.value;
  out.terms = a.terms + b.terms;
  out.accelerated = a.accelerated || b.accelerated;
  Real scale = abs(out.value);
  if (scale.is_zero()) scale = Real(1L);
  out.achieved = (a.achieved * abs(a.value) + b.achieved * abs(b.value)) / scale;
  return out;
}

Evaluated exact_value(const Complex& v) { return {v, 0, false, Real()}; }

SeriesSpec general_spec(Family f, Weight w, const Complex& z) { return {f, w, series::GeneralArg{z}}; }
SeriesSpec half_spec(Family f, Weight w, long m) { return {f, w, series::HalfIntegerArg{m}}; }

// ---------------------------------------------------------------- text

std::string den_text(Family f) {
  switch (f) {
    case Family::P2: return "n^2";
    case Family::N3: return "n^3";
    case Family::N4: return "n^4";
    default: return series::to_string(f);
  }
}

std::string general_lhs(Family f, WK w) {
  std::string num;
  switch (w) {
    case WK::One: num = "1"; break;
    case WK::HShift: num = "H_{n+z}"; break;
    case WK::HDiff: num = "(H_{n+z} - H_z)"; break;
    default: num = "((H_{n+z} - H_z)^2 + H_{n+z}^(2) - H_z^(2))"; break;
  }
  return "sum_{n>=1} " + num + " / (" + den_text(f) + " C(n+z,n))";
}

std::string half_lhs(Family f, WK w) {
  std::string num = w == WK::OShift ? "4^n O_{n+m}" : "4^n";
  return "sum_{n>=1} " + num + " / (" + den_text(f) + " C(2(n+m),n+m) C(n+m,m))";
}

const char* kGeneralDomain = "z complex, not a negative integer; series converges for Re z > -1";
const char* kHalfDomain = "m integer >= 0";

// ---------------------------------------------------------------- registry

class Builder {
 public:
  std::vector<Entry> entries;

  void general(std::string id, std::string prov, Family f, WK w, std::string rhs_text,
               std::function<Complex(const ZVals&)> rhs) {
    Entry e;
    e.record = {std::move(id), Kind::InfiniteSeries, std::move(prov), general_lhs(f, w), std::move(rhs_text),
                {"z"}, kGeneralDomain, canonical_z(), false};
    e.check = [](const Params& p) {
      check_names(p, {"z"});
      check_z(p);
    };
    e.rhs = [rhs](const Params& p) { return rhs(ZVals(get(p, "z").value)); };
    e.lhs = [f, w](const Params& p, const PrecisionContext& ctx) {
      return sum_series(general_spec(f, Weight{w, 1}, get(p, "z").value), 1, ctx);
    };
    entries.push_back(std::move(e));
  }

  void half(std::string id, std::string prov, Family f, WK w, std::string rhs_text,
            std::function<Real(const MVals&)> rhs) {
    Entry e;
    e.record = {std::move(id), Kind::InfiniteSeries, std::move(prov), half_lhs(f, w), std::move(rhs_text),
                {"m"}, kHalfDomain, canonical_m(), false};
    e.check = [](const Params& p) {
      check_names(p, {"m"});
      require_range(get_int(p, "m"), 0, 1'000'000, "m");
    };
    e.rhs = [rhs](const Params& p) { return Complex(rhs(MVals(get_int(p, "m")))); };
    e.lhs = [f, w](const Params& p, const PrecisionContext& ctx) {
      return sum_series(half_spec(f, Weight{w, 1}, get_int(p, "m")), 1, ctx);
    };
    entries.push_back(std::move(e));
  }

  void particular(std::string id, std::string prov, SeriesSpec spec, BigRational scale, std::string lhs_text,
                  std::string rhs_text, std::function<Real()> rhs) {
    Entry e;
    e.record = {std::move(id), Kind::InfiniteSeries, std::move(prov), std::move(lhs_text), std::move(rhs_text),
                {}, "no parameters", {Params{}}, false};
    e.check = [](const Params& p) { check_names(p, {}); };
    e.rhs = [rhs](const Params&) { return Complex(rhs()); };
    e.lhs = [spec, scale](const Params&, const PrecisionContext& ctx) { return sum_series(spec, scale, ctx); };
    entries.push_back(std::move(e));
  }

  void derived(std::string id, std::string prov, std::string lhs_text, std::string rhs_text,
               std::function<Evaluated(const PrecisionContext&)> lhs, std::function<Real()> rhs) {
    Entry e;
    e.record = {std::move(id), Kind::DerivedScalar, std::move(prov), std::move(lhs_text), std::move(rhs_text),
                {}, "no parameters", {Params{}}, false};
    e.check = [](const Params& p) { check_names(p, {}); };
    e.rhs = [rhs](const Params&) { return Complex(rhs()); };
    e.lhs = [lhs](const Params&, const PrecisionContext& ctx) { return lhs(ctx); };
    entries.push_back(std::move(e));
  }

  void add(Entry e) { entries.push_back(std::move(e)); }
};

// sum_{n>=1} H_n^(p) / n^q for p, q in 2..4.
SeriesSpec euler_sum(long p, long q) {
  Family f = q == 2 ? Family::P2 : q == 3 ? Family::N3 : Family::N4;
  return general_spec(f, Weight::plain(p), Complex(0L));
}

SeriesSpec particular_spec(const std::string& id) {
  // Looked up by the derived scalars that combine particulars.
  if (id == "quad.hyyfilz") return general_spec(Family::P2, {WK::QDiff, 1}, Complex(0L));
  if (id == "thm3.b4jk2f8") return general_spec(Family::P2, Weight::plain(1), Complex(1L));
  if (id == "thm.pwogiuk.v8qrbaf") return general_spec(Family::P12, Weight::plain(1), Complex(1L));
  if (id == "quad.P12.v82402j") return general_spec(Family::P12, {WK::QDiff, 1}, Complex(0L));
  if (id == "rem.xu") return general_spec(Family::P12, Weight::plain(2), Complex(0L));
  throw NotFound(id);
}

ExactReport exact_report(const Params& p, std::vector<std::string> basis, std::vector<BigRational> lhs,
                         std::vector<BigRational> rhs) {
  ExactReport r;
  r.params = p;
  r.basis = std::move(basis);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.equal = r.lhs == r.rhs;
  return r;
}

std::vector<std::string> constant_basis() {
  const auto& names = harmonic::ConstantForm::basis_names();
  return {names.begin(), names.end()};
}

std::vector<BigRational> coeffs(const harmonic::ConstantForm& f) { return {f.coeff.begin(), f.coeff.end()}; }

void add_finite(Builder& b) {
  // Frisch identity
  {
    Entry e;
    e.record = {"frisch", Kind::FiniteSum, "frisch identity (proof of main)",
                "sum_{k=1}^n C(n,k) (-1)^(k-1) k/(z+k)", "1/C(n+z,n)", {"n", "z"},
                "n integer >= 1; z + k != 0 for k = 1..n",
                {make_params({{"n", "2"}, {"z", "1"}}), make_params({{"n", "5"}, {"z", "1/2"}}),
                 make_params({{"n", "12"}, {"z", "5/6"}}), make_params({{"n", "4"}, {"z", "0.3+0.7i"}})},
                true};
    e.check = [](const Params& p) {
      check_names(p, {"n", "z"});
      const long n = get_int(p, "n");
      require_range(n, 1, 100'000, "n");
      const Complex& z = get(p, "z").value;
      if (z.is_integer() && z.re <= -1L && z.re >= -n) throw DomainError("z + k vanishes for some k in 1..n");
    };
    e.lhs = [](const Params& p, const PrecisionContext&) {
      return exact_value(harmonic::frisch_sum(get_int(p, "n"), get(p, "z").value));
    };
    e.rhs = [](const Params& p) { return harmonic::frisch_closed(get_int(p, "n"), get(p, "z").value); };
    e.exact = [](const Params& p) {
      const long n = get_int(p, "n");
      const BigRational z = get_rational(p, "z");
      return exact_report(p, {"1"}, {harmonic::frisch_sum(n, z)}, {harmonic::frisch_closed(n, z)});
    };
    b.add(std::move(e));
  }
  // Inverse binomial sum
  {
    Entry e;
    e.record = {"bs", Kind::FiniteSum, "bs", "sum_{k=1}^m 1/C(k+n,k)", "1/(n-1) - n/(n-1) / C(m+n,m+1)",
                {"m", "n"}, "m integer >= 1; n not 0 or 1, no vanishing binomials",
                {make_params({{"m", "3"}, {"n", "2"}}), make_params({{"m", "1"}, {"n", "3"}}),
                 make_params({{"m", "2"}, {"n", "1/2"}}), make_params({{"m", "20"}, {"n", "-7/3"}}),
                 make_params({{"m", "5"}, {"n", "0.3+0.7i"}})},
                true};
    e.check = [](const Params& p) {
      check_names(p, {"m", "n"});
      require_range(get_int(p, "m"), 1, 100'000, "m");
      const Complex& n = get(p, "n").value;
      if (n.is_integer() && n.re <= 1L && n.re >= -get_int(p, "m") - 1) {
        throw DomainError("n = " + get(p, "n").text + " makes a binomial vanish or is excluded");
      }
    };
    e.lhs = [](const Params& p, const PrecisionContext&) {
      return exact_value(harmonic::finite_binom_sum(get_int(p, "m"), get(p, "n").value));
    };
    e.rhs = [](const Params& p) { return harmonic::finite_binom_sum_closed(get_int(p, "m"), get(p, "n").value); };
    e.exact = [](const Params& p) {
      const long m = get_int(p, "m");
      const BigRational n = get_rational(p, "n");
      return exact_report(p, {"1"}, {harmonic::finite_binom_sum(m, n)}, {harmonic::finite_binom_sum_closed(m, n)});
    };
    b.add(std::move(e));
  }
  // Half-integer harmonic relations
  struct L1 {
    const char* id;
    const char* lhs;
    const char* rhs;
    long order;  // 0: order is the parameter m + 1
    bool has_k;
  };
  const L1 rel[] = {
      {"lemma1.1", "H_{k-1/2}", "2 O_k - 2 ln 2", 1, true},
      {"lemma1.2", "H_{k-1/2}^(2)", "-2 zeta(2) + 4 O_k^(2)", 2, true},
      {"lemma1.3", "H_{-1/2}^(3)", "-6 zeta(3)", 3, false},
      {"lemma1.4", "H_{-1/2}^(4)", "-14 zeta(4)", 4, false},
      {"lemma1.5", "H_{k-1/2}^(m+1) - H_{-1/2}^(m+1)", "2^(m+1) O_k^(m+1)", 0, true},
  };
  for (const L1& r : rel) {
    Entry e;
    std::vector<std::string> names;
    std::vector<Params> canon;
    if (r.order == 0) {
      names = {"m", "k"};
      canon = {make_params({{"m", "1"}, {"k", "3"}}), make_params({{"m", "2"}, {"k", "4"}}),
               make_params({{"m", "3"}, {"k", "2"}}), make_params({{"m", "0"}, {"k", "7"}})};
    } else if (r.has_k) {
      names = {"k"};
      canon = {one("k", "0"), one("k", "1"), one("k", "5")};
    } else {
      canon = {Params{}};
    }
    e.record = {r.id, Kind::FiniteSum, "lem.ho", r.lhs, r.rhs, names,
                r.order == 0 ? "m in 0..3, k integer >= 0" : r.has_k ? "k integer >= 0" : "no parameters",
                canon, true};
    const long fixed = r.order;
    const bool has_k = r.has_k;
    auto order_of = [fixed](const Params& p) { return fixed == 0 ? get_int(p, "m") + 1 : fixed; };
    e.check = [names, fixed, has_k](const Params& p) {
      check_names(p, names);
      if (fixed == 0) require_range(get_int(p, "m"), 0, 3, "m");
      if (has_k) require_range(get_int(p, "k"), 0, 1'000'000, "k");
    };
    e.lhs = [order_of, fixed, has_k](const Params& p, const PrecisionContext&) {
      const long s = order_of(p);
      const long k = has_k ? get_int(p, "k") : 0;
      Complex v = harmonic::gen_harmonic(s, Complex(Real(k) - Real(0.5)));
      if (fixed == 0) v -= harmonic::gen_harmonic(s, Complex(Real(-0.5)));
      return exact_value(v);
    };
    e.rhs = [order_of, fixed, has_k](const Params& p) {
      const long s = order_of(p);
      const long k = has_k ? get_int(p, "k") : 0;
      if (fixed == 0) return Complex(Real(BigRational(pow2(s) * harmonic::odd_harmonic(s, k))));
      return harmonic::half_integer_harmonic(s, k);
    };
    e.exact = [order_of, fixed, has_k](const Params& p) {
      const long s = order_of(p);
      const long k = has_k ? get_int(p, "k") : 0;
      harmonic::ConstantForm lhs = harmonic::half_integer_harmonic_form(s, k);
      harmonic::ConstantForm rhs;
      if (fixed == 0) {
        harmonic::ConstantForm base = harmonic::half_integer_harmonic_form(s, 0);
        for (std::size_t i = 0; i < lhs.coeff.size(); ++i) lhs.coeff[i] -= base.coeff[i];
        rhs.coeff[0] = pow2(s) * harmonic::odd_harmonic(s, k);
      } else if (s == 1) {
        rhs.coeff[0] = 2 * harmonic::odd_harmonic(1, k);
        rhs.coeff[1] = -2;
      } else if (s == 2) {
        rhs.coeff[0] = 4 * harmonic::odd_harmonic(2, k);
        rhs.coeff[2] = -2;
      } else if (s == 3) {
        rhs.coeff[3] = -6;
      } else {
        rhs.coeff[4] = -14;
      }
      return exact_report(p, constant_basis(), coeffs(lhs), coeffs(rhs));
    };
    b.add(std::move(e));
  }
  // Half-integer binomial coefficients
  struct L2 {
    harmonic::BinomCase c;
    const char* lhs;
    const char* rhs;
    const char* domain;
    std::vector<Params> canon;
  };
  using BC = harmonic::BinomCase;
  const std::vector<L2> cases = {
      {BC::A, "C(u-1/2, v)", "C(2u,u) C(u,v) 2^(-2v) / C(2(u-v),u-v)", "u >= v >= 0 integers",
       {make_params({{"u", "3"}, {"v", "1"}}), make_params({{"u", "5"}, {"v", "5"}}),
        make_params({{"u", "10"}, {"v", "4"}})}},
      {BC::B, "C(u, 1/2)", "2^(2u+1) / (pi C(2u,u))", "u >= 0 integer", {one("u", "1"), one("u", "4")}},
      {BC::C, "C(u, 1/2-v)", "(-1)^(v-1)/v 2^(2u+2) C(2(v-1),v-1) / (pi C(u+v,v) C(2(u+v),u+v))",
       "u >= 0, v >= 1 integers",
       {make_params({{"u", "0"}, {"v", "1"}}), make_params({{"u", "2"}, {"v", "3"}})}},
      {BC::D, "C(u+1/2, v)", "C(2u+1,2v) 2^(-2v) C(2v,v) / C(u,v)", "u >= v >= 0 integers",
       {make_params({{"u", "2"}, {"v", "1"}}), make_params({{"u", "6"}, {"v", "3"}})}},
      {BC::E, "C(u+1/2, v)", "(-1)^(v-u-1) 2^(1-2v) (2u+1)/(v-u) C(2u,u) C(2(v-u-1),v-u-1) / C(v,u)",
       "v > u >= 0 integers",
       {make_params({{"u", "1"}, {"v", "3"}}), make_params({{"u", "0"}, {"v", "2"}})}},
      {BC::F, "C(-3/2, u)", "(-1)^u (2u+1) 2^(-2u) C(2u,u)", "u >= 0 integer", {one("u", "2"), one("u", "7")}},
  };
  for (const L2& c : cases) {
    const bool has_v = c.c != BC::B && c.c != BC::F;
    std::vector<std::string> names = has_v ? std::vector<std::string>{"u", "v"} : std::vector<std::string>{"u"};
    Entry e;
    e.record = {std::string("lemma2.") + harmonic::to_char(c.c), Kind::FiniteSum, "lem.bin", c.lhs, c.rhs,
                names, c.domain, c.canon, true};
    const BC bc = c.c;
    auto args = [bc, has_v](const Params& p) {
      const long u = get_int(p, "u");
      const long v = has_v ? get_int(p, "v") : 0;
      require_range(u, -100'000, 100'000, "u");
      require_range(v, -100'000, 100'000, "v");
      return std::pair<long, long>{u, v};
    };
    e.check = [names, args, bc](const Params& p) {
      check_names(p, names);
      auto [u, v] = args(p);
      harmonic::half_integer_binom_exact(bc, u, v);  // throws DomainError outside the range
    };
    e.lhs = [args, bc](const Params& p, const PrecisionContext&) {
      auto [u, v] = args(p);
      return exact_value(harmonic::half_integer_binom(bc, u, v).lhs);
    };
    e.rhs = [args, bc](const Params& p) {
      auto [u, v] = args(p);
      return harmonic::half_integer_binom(bc, u, v).rhs;
    };
    e.exact = [args, bc](const Params& p) {
      auto [u, v] = args(p);
      auto r = harmonic::half_integer_binom_exact(bc, u, v);
      return exact_report(p, {r.pi_power == 0 ? "1" : "1/pi"}, {r.lhs}, {r.rhs});
    };
    b.add(std::move(e));
  }
  // Weighted sums of H_z^(2)
  const char* wsum_rhs[] = {"(r+1) H_r^(2) - H_r", "(r(r+1) H_r^(2) + H_r - r) / 2",
                            "r(r+1)(2r+1)/6 H_r^(2) - H_r/6 + r/3 - r^2/6"};
  const char* wsum_lhs[] = {"sum_{z=1}^r H_z^(2)", "sum_{z=1}^r z H_z^(2)", "sum_{z=1}^r z^2 H_z^(2)"};
  const char* wsum_prov[] = {"proof of eq.bhasxe8", "eq.izgpi03", "proof of eq.vadi1jm"};
  for (int j = 0; j < 3; ++j) {
    Entry e;
    e.record = {"wsum.j" + std::to_string(j), Kind::FiniteSum, wsum_prov[j], wsum_lhs[j], wsum_rhs[j], {"r"},
                "r integer >= 1", {one("r", "1"), one("r", "2"), one("r", "10")}, true};
    e.check = [](const Params& p) {
      check_names(p, {"r"});
      require_range(get_int(p, "r"), 1, 100'000, "r");
    };
    e.lhs = [j](const Params& p, const PrecisionContext&) {
      return exact_value(Complex(Real(harmonic::weighted_h2_sum(j, get_int(p, "r")))));
    };
    e.rhs = [j](const Params& p) { return Complex(Real(harmonic::weighted_h2_closed(j, get_int(p, "r")))); };
    e.exact = [j](const Params& p) {
      const long r = get_int(p, "r");
      return exact_report(p, {"1"}, {harmonic::weighted_h2_sum(j, r)}, {harmonic::weighted_h2_closed(j, r)});
    };
    b.add(std::move(e));
  }
}

void add_symmetry(Builder& b) {
  {
    Entry e;
    e.record = {"sym.pq", Kind::InfiniteSeries, "symmetry relation (remark before bowen)",
                "sum_{n>=1} H_n^(p)/n^q + sum_{n>=1} H_n^(q)/n^p", "zeta(p) zeta(q) + zeta(p+q)", {"p", "q"},
                "p, q integers in 2..4",
                {make_params({{"p", "2"}, {"q", "3"}}), make_params({{"p", "2"}, {"q", "4"}}),
                 make_params({{"p", "3"}, {"q", "4"}})},
                false};
    e.check = [](const Params& p) {
      check_names(p, {"p", "q"});
      require_range(get_int(p, "p"), 2, 4, "p");
      require_range(get_int(p, "q"), 2, 4, "q");
    };
    e.lhs = [](const Params& p, const PrecisionContext& ctx) {
      const long a = get_int(p, "p"), c = get_int(p, "q");
      return combine(sum_series(euler_sum(a, c), 1, ctx), sum_series(euler_sum(c, a), 1, ctx), +1);
    };
    e.rhs = [](const Params& p) {
      const long a = get_int(p, "p"), c = get_int(p, "q");
      return Complex(zeta_n(a) * zeta_n(c) + zeta_n(a + c));
    };
    b.add(std::move(e));
  }
  {
    Entry e;
    e.record = {"sym.pp", Kind::InfiniteSeries, "symmetry relation (remark before bowen)",
                "sum_{n>=1} H_n^(p)/n^p", "(zeta(p)^2 + zeta(2p)) / 2", {"p"}, "p integer in 2..4",
                {one("p", "2"), one("p", "3"), one("p", "4")}, false};
    e.check = [](const Params& p) {
      check_names(p, {"p"});
      require_range(get_int(p, "p"), 2, 4, "p");
    };
    e.lhs = [](const Params& p, const PrecisionContext& ctx) {
      const long a = get_int(p, "p");
      return sum_series(euler_sum(a, a), 1, ctx);
    };
    e.rhs = [](const Params& p) {
      const long a = get_int(p, "p");
      Real za = zeta_n(a);
      return Complex((za * za + zeta_n(2 * a)) / 2L);
    };
    b.add(std::move(e));
  }
  b.particular("h2n2", "symmetry relation at p = q = 2", euler_sum(2, 2), 1, "sum_{n>=1} H_n^(2)/n^2",
               "7/4 zeta(4)", [] { return 7L * K().zeta4 / 4L; });
  b.derived("bowen", "bowen", "sum_{n>=1} H_n^2/n^2 = [sum (H_n^2 + H_n^(2))/n^2] - [sum H_n^(2)/n^2]",
            "17/4 zeta(4)",
            [](const PrecisionContext& ctx) {
              return combine(sum_series(particular_spec("quad.hyyfilz"), 1, ctx),
                             sum_series(euler_sum(2, 2), 1, ctx), -1);
            },
            [] { return 17L * K().zeta4 / 4L; });
}

std::vector<Entry> build() {
  Builder b;
  const auto pi2 = [] { return K().pi * K().pi; };
  const auto pi4 = [pi2] { return pi2() * pi2(); };
  const auto z2 = [] { return K().zeta2; };
  const auto z3 = [] { return K().zeta3; };
  const auto z4 = [] { return K().zeta4; };
  const auto R = [](long a, long c) { return Real(make_rational(a, c)); };

  // Second-order family n^2
  b.general("main", "main", Family::P2, WK::One, "zeta(2) - H_z^(2)", [](const ZVals& v) { return v.d2; });
  b.half("thm2", "eq.nw1yuwc", Family::P2, WK::One, "(3 zeta(2) - 4 O_m^(2)) / C(2m,m)",
         [](const MVals& v) { return (3L * K().zeta2 - 4L * v.o2) / v.b; });
  b.particular("thm2.m0", "thm.f6brbmb (m = 0)", half_spec(Family::P2, Weight::one(), 0), 1,
               "sum_{n>=1} 4^n / (n^2 C(2n,n))", "pi^2/2", [pi2] { return pi2() / 2L; });
  b.general("thm3", "eq.jdzztai", Family::P2, WK::HShift, "H_z (zeta(2) - H_z^(2)) + 2 (zeta(3) - H_z^(3))",
            [](const ZVals& v) { return v.h1 * v.d2 + 2L * v.d3; });
  b.particular("thm3.euler", "eq.jdzztai (z = 0)", general_spec(Family::P2, {WK::HShift, 1}, Complex(0L)), 1,
               "sum_{n>=1} H_n / n^2", "2 zeta(3)", [z3] { return 2L * z3(); });
  b.particular("thm3.b4jk2f8", "eq.b4jk2f8", particular_spec("thm3.b4jk2f8"), 1,
               "sum_{n>=1} H_n / (n^2 (n+1))", "2 zeta(3) - zeta(2)", [z2, z3] { return 2L * z3() - z2(); });
  b.particular("thm3.third", "eq.jdzztai (z = 2)", general_spec(Family::P2, Weight::plain(1), Complex(2L)),
               make_rational(1, 2), "sum_{n>=1} H_n / (n^2 (n+1)(n+2))", "zeta(3) - 3/4 zeta(2) + 1/4",
               [z2, z3, R] { return z3() - 3L * z2() / 4L + R(1, 4); });
  b.general("eq.lchpe3r", "eq.lchpe3r", Family::P2, WK::HDiff, "2 (zeta(3) - H_z^(3))",
            [](const ZVals& v) { return 2L * v.d3; });
  b.half("cor1", "eq.lchpe3r at z = m - 1/2", Family::P2, WK::OShift,
         "(O_m (3 zeta(2) - 4 O_m^(2)) + 7 zeta(3) - 8 O_m^(3)) / C(2m,m)", [](const MVals& v) {
           return (v.o1 * (3L * K().zeta2 - 4L * v.o2) + 7L * K().zeta3 - 8L * v.o3) / v.b;
         });
  b.general("quad.z", "quadratic theorem after eq.lchpe3r", Family::P2, WK::QDiff, "6 zeta(4) - 6 H_z^(4)",
            [](const ZVals& v) { return 6L * v.d4; });
  b.particular("quad.hyyfilz", "eq.hyyfilz", particular_spec("quad.hyyfilz"), 1,
               "sum_{n>=1} (H_n^2 + H_n^(2)) / n^2", "6 zeta(4)", [z4] { return 6L * z4(); });
  b.particular("quad.odd", "quadratic theorem after eq.lchpe3r (odd particular)",
               half_spec(Family::P2, {WK::QOdd, 1}, 0), 1, "sum_{n>=1} 4^n (O_n^2 + O_n^(2)) / (n^2 C(2n,n))",
               "pi^4/4", [pi4] { return pi4() / 4L; });

  add_symmetry(b);

  // n(n+1)
  b.general("lem.bhasxe8", "eq.bhasxe8", Family::P12, WK::One, "z (H_z^(2) - zeta(2)) + 1",
            [](const ZVals& v) { return -(v.z * v.d2) + 1L; });
  b.half("thm.halfP12", "eq.bhasxe8 at z = m - 1/2", Family::P12, WK::One,
         "((m - 1/2)(4 O_m^(2) - 3 zeta(2)) + 1) / C(2m,m)", [](const MVals& v) {
           return ((v.m - Real(0.5)) * (4L * v.o2 - 3L * K().zeta2) + 1L) / v.b;
         });
  b.particular("thm.halfP12.m0", "eq.bhasxe8 at z = -1/2", half_spec(Family::P12, Weight::one(), 0), 1,
               "sum_{n>=1} 4^n / (n(n+1) C(2n,n))", "pi^2/4 + 1", [pi2] { return pi2() / 4L + 1L; });
  b.particular("thm.halfP12.m1", "eq.bhasxe8 at z = 1/2", half_spec(Family::P12, Weight::one(), 1), 1,
               "sum_{n>=1} 4^n / (n(n+1)^2 C(2(n+1),n+1))", "3/2 - pi^2/8",
               [pi2, R] { return R(3, 2) - pi2() / 8L; });
  b.particular("thm.halfP12.m2", "eq.bhasxe8 at z = 3/2", half_spec(Family::P12, Weight::one(), 2),
               make_rational(1, 2), "sum_{n>=1} 4^n / (n(n+1)^2(n+2) C(2(n+2),n+2))", "23/36 - pi^2/16",
               [pi2, R] { return R(23, 36) - pi2() / 16L; });
  b.general("thm.pwogiuk", "eq.pwogiuk", Family::P12, WK::HShift,
            "(zeta(2) - H_z^(2))(1 - z H_z) + H_z - 2z (zeta(3) - H_z^(3))",
            [](const ZVals& v) { return v.d2 * (1L - v.z * v.h1) + v.h1 - 2L * v.z * v.d3; });
  b.particular("thm.pwogiuk.tgvrkzb", "eq.tgvrkzb", general_spec(Family::P12, {WK::HShift, 1}, Complex(0L)), 1,
               "sum_{n>=1} H_n / (n(n+1))", "pi^2/6", [pi2] { return pi2() / 6L; });
  b.particular("thm.pwogiuk.v8qrbaf", "eq.v8qrbaf", particular_spec("thm.pwogiuk.v8qrbaf"), 1,
               "sum_{n>=1} H_n / (n(n+1)^2)", "zeta(2) - zeta(3)", [z2, z3] { return z2() - z3(); });
  b.general("eq.ta7cqa4", "eq.ta7cqa4", Family::P12, WK::HDiff, "zeta(2) - H_z^(2) - 2z (zeta(3) - H_z^(3))",
            [](const ZVals& v) { return v.d2 - 2L * v.z * v.d3; });
  b.derived("rem.n2n12", "eq.b4jk2f8 minus eq.v8qrbaf",
            "sum_{n>=1} H_n / (n^2 (n+1)^2) = [sum H_n/(n^2(n+1))] - [sum H_n/(n(n+1)^2)]", "3 zeta(3) - 2 zeta(2)",
            [](const PrecisionContext& ctx) {
              return combine(sum_series(particular_spec("thm3.b4jk2f8"), 1, ctx),
                             sum_series(particular_spec("thm.pwogiuk.v8qrbaf"), 1, ctx), -1);
            },
            [z2, z3] { return 3L * z3() - 2L * z2(); });
  b.half("cor.halfP12odd", "eq.ta7cqa4 at z = m - 1/2", Family::P12, WK::OShift,
         "(3 zeta(2) - 4 O_m^(2))(1 - O_m (2m-1)) / (2 C(2m,m)) + O_m / C(2m,m) "
         "- (2m-1)(7 zeta(3) - 8 O_m^(3)) / (2 C(2m,m))",
         [](const MVals& v) {
           Real two_m_1 = 2L * v.m - 1L;
           return (3L * K().zeta2 - 4L * v.o2) * (1L - v.o1 * two_m_1) / (2L * v.b) + v.o1 / v.b -
                  two_m_1 * (7L * K().zeta3 - 8L * v.o3) / (2L * v.b);
         });
  b.particular("cor.halfP12odd.m0", "eq.ta7cqa4 at z = -1/2", half_spec(Family::P12, {WK::OShift, 1}, 0), 1,
               "sum_{n>=1} 4^n O_n / (n(n+1) C(2n,n))", "pi^2/4 + 7/2 zeta(3)",
               [pi2, z3] { return pi2() / 4L + 7L * z3() / 2L; });
  b.particular("cor.halfP12odd.m1", "eq.ta7cqa4 at z = 1/2", half_spec(Family::P12, {WK::OShift, 1}, 1), 1,
               "sum_{n>=1} 4^n O_{n+1} / (n(n+1)^2 C(2(n+1),n+1))", "5/2 - 7/4 zeta(3)",
               [z3, R] { return R(5, 2) - 7L * z3() / 4L; });
  b.general("quad.P12", "quadratic theorem after eq.ta7cqa4", Family::P12, WK::QDiff,
            "4 (zeta(3) - H_z^(3)) - 6z (zeta(4) - H_z^(4))",
            [](const ZVals& v) { return 4L * v.d3 - 6L * v.z * v.d4; });
  b.particular("quad.P12.v82402j", "eq.v82402j", particular_spec("quad.P12.v82402j"), 1,
               "sum_{n>=1} (H_n^2 + H_n^(2)) / (n(n+1))", "4 zeta(3)", [z3] { return 4L * z3(); });
  b.particular("quad.P12.odd", "quadratic theorem after eq.ta7cqa4 (odd particular)",
               half_spec(Family::P12, {WK::QOdd, 1}, 0), 1,
               "sum_{n>=1} 4^n (O_n^2 + O_n^(2)) / (n(n+1) C(2n,n))", "pi^4/8 + 7 zeta(3)",
               [pi4, z3] { return pi4() / 8L + 7L * z3(); });
  b.particular("rem.xu", "remark after eq.v82402j (cited evaluation)", particular_spec("rem.xu"), 1,
               "sum_{n>=1} H_n^(2) / (n(n+1))", "zeta(3)", [z3] { return z3(); });
  b.derived("h2.P12", "eq.v82402j minus the cited evaluation",
            "sum_{n>=1} H_n^2 / (n(n+1)) = [sum (H_n^2 + H_n^(2))/(n(n+1))] - [sum H_n^(2)/(n(n+1))]", "3 zeta(3)",
            [](const PrecisionContext& ctx) {
              return combine(sum_series(particular_spec("quad.P12.v82402j"), 1, ctx),
                             sum_series(particular_spec("rem.xu"), 1, ctx), -1);
            },
            [z3] { return 3L * z3(); });

  // n(n+1)(n+2) and n(n+2)
  b.general("lem.lmcv0zf", "eq.lmcv0zf", Family::P123, WK::One, "z(z+1)(H_z^(2) - zeta(2))/2 + z/2 + 1/4",
            [](const ZVals& v) { return -(v.z * (v.z + 1L) * v.d2) / 2L + v.z / 2L + q(1, 4); });
  b.general("lem.dhruknq", "eq.dhruknq", Family::P13, WK::One, "z(z-1)(zeta(2) - H_z^(2))/2 - z/2 + 3/4",
            [](const ZVals& v) { return v.z * (v.z - 1L) * v.d2 / 2L - v.z / 2L + q(3, 4); });
  b.half("thm.halfP123", "eq.lmcv0zf at z = m - 1/2", Family::P123, WK::One,
         "((m - 1/2)(m + 1/2)(4 O_m^(2) - 3 zeta(2)) + m) / (2 C(2m,m))", [](const MVals& v) {
           return ((v.m - Real(0.5)) * (v.m + Real(0.5)) * (4L * v.o2 - 3L * K().zeta2) + v.m) / (2L * v.b);
         });
  b.particular("thm.halfP123.m0", "eq.lmcv0zf at z = -1/2", half_spec(Family::P123, Weight::one(), 0), 1,
               "sum_{n>=1} 4^n / (n(n+1)(n+2) C(2n,n))", "pi^2/16", [pi2] { return pi2() / 16L; });
  b.particular("thm.halfP123.m1", "eq.lmcv0zf at z = 1/2", half_spec(Family::P123, Weight::one(), 1), 1,
               "sum_{n>=1} 4^n / (n(n+1)^2(n+2) C(2(n+1),n+1))", "1 - 3 pi^2/32",
               [pi2] { return 1L - 3L * pi2() / 32L; });
  b.particular("thm.halfP123.m2", "eq.lmcv0zf at z = 3/2", half_spec(Family::P123, Weight::one(), 2), 1,
               "sum_{n>=1} 2^(2n+1) / (n(n+1)^2(n+2)^2 C(2(n+2),n+2))", "14/9 - 5 pi^2/32",
               [pi2, R] { return R(14, 9) - 5L * pi2() / 32L; });
  b.general("thm.l2ciolu", "eq.l2ciolu", Family::P123, WK::HShift,
            "(z + 1/2 - z(z+1) H_z/2)(zeta(2) - H_z^(2)) + (z/2 + 1/4) H_z - z(z+1)(zeta(3) - H_z^(3)) - 1/2",
            [](const ZVals& v) {
              Complex zz1 = v.z * (v.z + 1L);
              return (v.z + q(1, 2) - zz1 * v.h1 / 2L) * v.d2 + (v.z / 2L + q(1, 4)) * v.h1 - zz1 * v.d3 - q(1, 2);
            });
  b.particular("thm.l2ciolu.z0", "eq.l2ciolu (z = 0)", general_spec(Family::P123, {WK::HShift, 1}, Complex(0L)),
               1, "sum_{n>=1} H_n / (n(n+1)(n+2))", "pi^2/12 - 1/2", [pi2, R] { return pi2() / 12L - R(1, 2); });
  b.particular("thm.l2ciolu.r7il44k", "eq.r7il44k", general_spec(Family::P123, Weight::plain(1), Complex(1L)), 1,
               "sum_{n>=1} H_n / (n(n+1)^2(n+2))", "pi^2/12 + 1/2 - zeta(3)",
               [pi2, z3, R] { return pi2() / 12L + R(1, 2) - z3(); });
  b.general("eq.y8vfuxa", "eq.y8vfuxa", Family::P123, WK::HDiff,
            "(z + 1/2)(zeta(2) - H_z^(2)) - z(z+1)(zeta(3) - H_z^(3)) - 1/2",
            [](const ZVals& v) { return (v.z + q(1, 2)) * v.d2 - v.z * (v.z + 1L) * v.d3 - q(1, 2); });
  b.half("thm.halfP123odd", "eq.y8vfuxa at z = m - 1/2", Family::P123, WK::OShift,
         "(m - O_m (m - 1/2)(m + 1/2))(3 zeta(2) - 4 O_m^(2)) / (2 C(2m,m)) "
         "- ((m - 1/2)(m + 1/2)(7 zeta(3) - 8 O_m^(3)) - m O_m + 1/2) / (2 C(2m,m))",
         [](const MVals& v) {
           Real mm = (v.m - Real(0.5)) * (v.m + Real(0.5));
           return (v.m - v.o1 * mm) * (3L * K().zeta2 - 4L * v.o2) / (2L * v.b) -
                  (mm * (7L * K().zeta3 - 8L * v.o3) - v.m * v.o1 + Real(0.5)) / (2L * v.b);
         });
  b.particular("thm.halfP123odd.m0", "eq.y8vfuxa at z = -1/2", half_spec(Family::P123, {WK::OShift, 1}, 0), 1,
               "sum_{n>=1} 4^n O_n / (n(n+1)(n+2) C(2n,n))", "7/8 zeta(3) - 1/4",
               [z3, R] { return 7L * z3() / 8L - R(1, 4); });
  b.particular("thm.halfP123odd.m1", "eq.y8vfuxa at z = 1/2", half_spec(Family::P123, {WK::OShift, 1}, 1), 1,
               "sum_{n>=1} 4^n O_{n+1} / (n(n+1)^2(n+2) C(2(n+1),n+1))", "pi^2/32 - 21/16 zeta(3) + 11/8",
               [pi2, z3, R] { return pi2() / 32L - 21L * z3() / 16L + R(11, 8); });
  b.general("quad.P123", "quadratic theorem after eq.y8vfuxa", Family::P123, WK::QDiff,
            "H_z^(2) - zeta(2) - 2(2z+1)(H_z^(3) - zeta(3)) + 3z(z+1)(H_z^(4) - zeta(4))",
            [](const ZVals& v) {
              return -v.d2 + 2L * (2L * v.z + 1L) * v.d3 - 3L * v.z * (v.z + 1L) * v.d4;
            });
  b.particular("quad.P123.z0", "quadratic theorem after eq.y8vfuxa (z = 0)",
               general_spec(Family::P123, {WK::QDiff, 1}, Complex(0L)), 1,
               "sum_{n>=1} (H_n^2 + H_n^(2)) / (n(n+1)(n+2))", "2 zeta(3) - zeta(2)",
               [z2, z3] { return 2L * z3() - z2(); });
  b.particular("quad.P123.odd", "quadratic theorem after eq.y8vfuxa (odd particular)",
               half_spec(Family::P123, {WK::QOdd, 1}, 0), 1,
               "sum_{n>=1} 4^n (O_n^2 + O_n^(2)) / (n(n+1)(n+2) C(2n,n))", "pi^4/32 - pi^2/8",
               [pi2, pi4] { return pi4() / 32L - pi2() / 8L; });

  // n(n+1)(n+2)(n+3) and n(n+3)
  b.general("lem.vadi1jm", "eq.vadi1jm", Family::P1234, WK::One,
            "z(z+1)(z+2)(H_z^(2) - zeta(2))/12 + z^2/12 + 5z/24 + 1/18", [](const ZVals& v) {
              return -(v.z * (v.z + 1L) * (v.z + 2L) * v.d2) / 12L + v.z * v.z / 12L + 5L * v.z / 24L + q(1, 18);
            });
  b.general("eq.pv5xq4g", "eq.pv5xq4g", Family::P14, WK::One,
            "z(z-1)(z-2)(H_z^(2) - zeta(2))/6 + z^2/6 - 7z/12 + 11/18", [](const ZVals& v) {
              return -(v.z * (v.z - 1L) * (v.z - 2L) * v.d2) / 6L + v.z * v.z / 6L - 7L * v.z / 12L + q(11, 18);
            });
  b.half("thm.halfP1234", "eq.vadi1jm at z = m - 1/2", Family::P1234, WK::One,
         "(m - 1/2)(m + 1/2)(m + 3/2)(4 O_m^(2) - 3 zeta(2)) / (12 C(2m,m)) + (m^2/3 + m/2 - 1/9) / (4 C(2m,m))",
         [](const MVals& v) {
           Real p3 = (v.m - Real(0.5)) * (v.m + Real(0.5)) * (v.m + Real(1.5));
           return p3 * (4L * v.o2 - 3L * K().zeta2) / (12L * v.b) +
                  (v.m * v.m / 3L + v.m / 2L - Real(make_rational(1, 9))) / (4L * v.b);
         });
  b.particular("thm.halfP1234.m0", "eq.vadi1jm at z = -1/2", half_spec(Family::P1234, Weight::one(), 0), 1,
               "sum_{n>=1} 4^n / (n(n+1)(n+2)(n+3) C(2n,n))", "pi^2/64 - 1/36",
               [pi2, R] { return pi2() / 64L - R(1, 36); });
  b.particular("thm.halfP1234.m1", "eq.vadi1jm at z = 1/2", half_spec(Family::P1234, Weight::one(), 1), 1,
               "sum_{n>=1} 4^n / (n(n+1)^2(n+2)(n+3) C(2(n+1),n+1))", "29/72 - 5 pi^2/128",
               [pi2, R] { return R(29, 72) - 5L * pi2() / 128L; });
  b.particular("thm.halfP1234.m2", "eq.vadi1jm at z = 3/2", half_spec(Family::P1234, Weight::one(), 2), 1,
               "sum_{n>=1} 2^(2n+1) / (n(n+1)^2(n+2)^2(n+3) C(2(n+2),n+2))", "65/72 - 35 pi^2/384",
               [pi2, R] { return R(65, 72) - 35L * pi2() / 384L; });
  b.general("thm.qaytndb", "eq.qaytndb", Family::P1234, WK::HShift,
            "(z(z+1)(z+2) H_z/12 - z(z+2)/4 - 1/6)(H_z^(2) - zeta(2)) + z(z+1)(z+2)(H_z^(3) - zeta(3))/6 "
            "+ (z^2/12 + 5z/24 + 1/18) H_z - z/6 - 5/24",
            [](const ZVals& v) {
              Complex p3 = v.z * (v.z + 1L) * (v.z + 2L);
              return -((p3 * v.h1 / 12L - v.z * (v.z + 2L) / 4L - q(1, 6)) * v.d2) - p3 * v.d3 / 6L +
                     (v.z * v.z / 12L + 5L * v.z / 24L + q(1, 18)) * v.h1 - v.z / 6L - q(5, 24);
            });
  b.particular("thm.qaytndb.z0", "eq.qaytndb (z = 0)", general_spec(Family::P1234, {WK::HShift, 1}, Complex(0L)),
               1, "sum_{n>=1} H_n / (n(n+1)(n+2)(n+3))", "pi^2/36 - 5/24",
               [pi2, R] { return pi2() / 36L - R(5, 24); });
  b.general("eq.z5mqka6", "eq.z5mqka6", Family::P1234, WK::HDiff,
            "-(z(z+2)/4 + 1/6)(H_z^(2) - zeta(2)) + z(z+1)(z+2)(H_z^(3) - zeta(3))/6 - z/6 - 5/24",
            [](const ZVals& v) {
              return (v.z * (v.z + 2L) / 4L + q(1, 6)) * v.d2 - v.z * (v.z + 1L) * (v.z + 2L) * v.d3 / 6L - v.z / 6L -
                     q(5, 24);
            });
  b.half("thm.halfP1234odd", "eq.z5mqka6 at z = m - 1/2", Family::P1234, WK::OShift,
         "((m - 1/2)(m + 1/2)(m + 3/2) O_m/6 - m^2/4 - m/4 + 1/48)(4 O_m^(2) - 3 zeta(2)) / (2 C(2m,m)) "
         "+ (m - 1/2)(m + 1/2)(m + 3/2)(8 O_m^(3) - 7 zeta(3)) / (12 C(2m,m)) "
         "+ ((6m^2 + 9m - 2) O_m/36 - m/6 - 1/8) / (2 C(2m,m))",
         [](const MVals& v) {
           Real p3 = (v.m - Real(0.5)) * (v.m + Real(0.5)) * (v.m + Real(1.5));
           Real a = p3 * v.o1 / 6L - v.m * v.m / 4L - v.m / 4L + Real(make_rational(1, 48));
           Real c = ((6L * v.m * v.m + 9L * v.m - 2L) * v.o1 / 36L - v.m / 6L - Real(make_rational(1, 8)));
           return a * (4L * v.o2 - 3L * K().zeta2) / (2L * v.b) + p3 * (8L * v.o3 - 7L * K().zeta3) / (12L * v.b) +
                  c / (2L * v.b);
         });
  b.particular("thm.halfP1234odd.m0", "eq.z5mqka6 at z = -1/2", half_spec(Family::P1234, {WK::OShift, 1}, 0), 1,
               "sum_{n>=1} 4^n O_n / (n(n+1)(n+2)(n+3) C(2n,n))", "7/32 zeta(3) - pi^2/192 - 1/16",
               [pi2, z3, R] { return 7L * z3() / 32L - pi2() / 192L - R(1, 16); });
  b.particular("thm.halfP1234odd.m1", "eq.z5mqka6 at z = 1/2", half_spec(Family::P1234, {WK::OShift, 1}, 1), 1,
               "sum_{n>=1} 4^n O_{n+1} / (n(n+1)^2(n+2)(n+3) C(2(n+1),n+1))", "137/288 + pi^2/48 - 35/64 zeta(3)",
               [pi2, z3, R] { return R(137, 288) + pi2() / 48L - 35L * z3() / 64L; });
  b.general("quad.P1234", "quadratic theorem after eq.z5mqka6", Family::P1234, WK::QDiff,
            "(z+1)(H_z^(2) - zeta(2))/2 - (z(z+2) + 2/3)(H_z^(3) - zeta(3)) "
            "+ z(z+1)(z+2)(H_z^(4) - zeta(4))/2 + 1/6",
            [](const ZVals& v) {
              return -((v.z + 1L) * v.d2) / 2L + (v.z * (v.z + 2L) + q(2, 3)) * v.d3 -
                     v.z * (v.z + 1L) * (v.z + 2L) * v.d4 / 2L + q(1, 6);
            });
  b.particular("quad.P1234.z0", "quadratic theorem after eq.z5mqka6 (z = 0)",
               general_spec(Family::P1234, {WK::QDiff, 1}, Complex(0L)), 1,
               "sum_{n>=1} (H_n^2 + H_n^(2)) / (n(n+1)(n+2)(n+3))", "2/3 zeta(3) - pi^2/12 + 1/6",
               [pi2, z3, R] { return 2L * z3() / 3L - pi2() / 12L + R(1, 6); });
  b.particular("quad.P1234.odd", "quadratic theorem after eq.z5mqka6 (odd particular)",
               half_spec(Family::P1234, {WK::QOdd, 1}, 0), 1,
               "sum_{n>=1} 4^n (O_n^2 + O_n^(2)) / (n(n+1)(n+2)(n+3) C(2n,n))",
               "pi^4/128 - pi^2/32 - 7/48 zeta(3) + 1/24",
               [pi2, pi4, z3, R] { return pi4() / 128L - pi2() / 32L - 7L * z3() / 48L + R(1, 24); });

  add_finite(b);

  std::sort(b.entries.begin(), b.entries.end(),
            [](const Entry& a, const Entry& c) { return a.record.id < c.record.id; });
  return std::move(b.entries);
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = build();
  return entries;
}

const Entry& entry(std::string_view id) {
  const auto& all = registry();
  auto it = std::lower_bound(all.begin(), all.end(), id,
                             [](const Entry& e, std::string_view key) { return e.record.id < key; });
  if (it == all.end() || it->record.id != id) throw NotFound("unknown identity id '" + std::string(id) + "'");
  return *it;
}

[[noreturn]] void rethrow_with_id(const Error& e, std::string_view id) {
  const std::string msg = std::string(id) + ": " + e.what();
  const std::string kind = e.kind();
  if (kind == "PoleError") throw PoleError(msg);
  if (kind == "DomainError") throw DomainError(msg);
  if (kind == "ConvergenceError") throw ConvergenceError(msg);
  if (kind == "EstimateUnavailable") throw EstimateUnavailable(msg);
  if (kind == "AccelerationDiverged") throw AccelerationDiverged(msg);
  if (kind == "NotFound") throw NotFound(msg);
  if (kind == "KindError") throw KindError(msg);
  if (kind == "ParseError") throw ParseError(msg);
  throw Error(msg);
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::InfiniteSeries: return "infinite_series";
    case Kind::FiniteSum: return "finite_sum";
    case Kind::DerivedScalar: return "derived_scalar";
  }
  return "?";
}

ParamValue parse_param(std::string_view text) {
  ParamValue out;
  out.text = std::string(text);
  if (text.empty()) throw ParseError("empty parameter value");
  if (auto r = parse_rational(text)) {
    out.exact = *r;
    out.value = Complex(Real(*r));
    return out;
  }
  if (text.back() != 'i') throw ParseError("cannot parse parameter value '" + out.text + "'");
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto parse_part = [&](std::string_view s, bool imaginary) {
    if (imaginary && (s.empty() || s == "+")) return Real(1L);
    if (imaginary && s == "-") return Real(-1L);
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    try {
      return Real::parse(s);
    } catch (const ParseError&) {
      throw ParseError("cannot parse parameter value '" + out.text + "'");
    }
  };
  if (split == std::string_view::npos) {
    out.value = Complex(Real(0L), parse_part(body, true));
  } else {
    out.value = Complex(parse_part(body.substr(0, split), false), parse_part(body.substr(split), true));
  }
  if (out.value.is_real() && out.value.re.is_finite()) {
    // "2+0i" style input: keep it complex-typed but still usable.
  }
  return out;
}

Params make_params(std::initializer_list<std::pair<const char*, const char*>> items) {
  Params p;
  for (const auto& [k, v] : items) p[k] = parse_param(v);
  return p;
}

std::string to_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ", ";
    s += k + "=" + v.text;
  }
  return s;
}

const std::vector<IdentityRecord>& list_identities() {
  static const std::vector<IdentityRecord> records = [] {
    std::vector<IdentityRecord> out;
    for (const auto& e : registry()) out.push_back(e.record);
    return out;
  }();
  return records;
}

const IdentityRecord& lookup(std::string_view id) { return entry(id).record; }

Complex closed_form(std::string_view id, const Params& params) {
  const Entry& e = entry(id);
  try {
    e.check(params);
    return e.rhs(params);
  } catch (const Error& err) {
    rethrow_with_id(err, id);
  }
}

VerificationReport verify(std::string_view id, const Params& params, const PrecisionContext& ctx) {
  const Entry& e = entry(id);
  ContextScope scope(ctx);
  VerificationReport r;
  r.id = e.record.id;
  r.provenance = e.record.provenance;
  r.params = params;
  const auto start = std::chrono::steady_clock::now();
  try {
    e.check(params);
    Evaluated lhs = e.lhs(params, ctx);
    r.lhs = lhs.value;
    r.terms_used = lhs.terms;
    r.accelerated = lhs.accelerated;
    r.achieved_tol = lhs.achieved;
    r.rhs = e.rhs(params);
  } catch (const Error& err) {
    rethrow_with_id(err, id);
  }
  r.abs_error = abs(r.lhs - r.rhs);
  const Real rhs_mag = abs(r.rhs);
  if (rhs_mag.is_zero()) {
    r.rel_error = r.abs_error;
    r.threshold = Real(1e-12);
    r.passed = r.abs_error <= r.threshold;
  } else {
    r.rel_error = r.abs_error / rhs_mag;
    r.threshold = max(Real(ctx.target_tol), 100L * r.achieved_tol);
    r.passed = r.rel_error <= r.threshold;
  }
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ExactReport verify_exact(std::string_view id, const Params& params) {
  const Entry& e = entry(id);
  if (!e.exact) {
    throw KindError(std::string(id) + ": exact verification applies to finite identities only, this is " +
                    to_string(e.record.kind));
  }
  try {
    e.check(params);
    ExactReport r = e.exact(params);
    r.id = e.record.id;
    return r;
  } catch (const Error& err) {
    rethrow_with_id(err, id);
  }
}

std::vector<VerificationReport> sweep(std::string_view id, const std::vector<Params>& grid,
                                      const PrecisionContext& ctx) {
  const Entry& e = entry(id);
  std::vector<VerificationReport> out;
  for (const Params& p : grid) {
    try {
      out.push_back(verify(id, p, ctx));
    } catch (const Error& err) {
      VerificationReport r;
      r.id = e.record.id;
      r.provenance = e.record.provenance;
      r.params = p;
      r.error_kind = err.kind();
      r.error_message = err.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

nlohmann::json registry_json() {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& r : list_identities()) {
    nlohmann::json canon = nlohmann::json::array();
    for (const auto& p : r.canonical_params) {
      nlohmann::json o = nlohmann::json::object();
      for (const auto& [k, v] : p) o[k] = v.text;
      canon.push_back(o);
    }
    ids.push_back({{"id", r.id},
                   {"kind", to_string(r.kind)},
                   {"provenance", r.provenance},
                   {"lhs", r.lhs_text},
                   {"rhs", r.rhs_text},
                   {"params", r.param_names},
                   {"domain", r.domain},
                   {"canonical_params", canon},
                   {"exact", r.exact_available}});
  }
  return {{"schema_version", kRegistrySchemaVersion}, {"identities", ids}};
}

}  // namespace hseries::catalog
