#include "hseries/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "hseries/errors.hpp"
#include "hseries/harmonic.hpp"
#include "hseries/rational.hpp"
#include "hseries/specfun.hpp"

namespace hseries::series {

namespace {

constexpr long kGuardBits = 32;
constexpr long kSolveGuardBits = 64;
constexpr long kDirectLimit = 50;
constexpr long kExactWeightLimit = 64;
constexpr long kFirstLevel = 512;
constexpr long kGridBase = 16;
constexpr int kGridPerOctave = 6;
constexpr int kWindowOctaves = 3;

mpfr_prec_t guarded(long extra) { return working_precision() + extra; }

Complex inverse(const Complex& x) { return Complex(1L) / x; }

Complex harmonic_at(const Complex& x) { return harmonic::harmonic(x); }
Complex harmonic2_at(const Complex& x) { return harmonic::gen_harmonic(2, x); }

Real denominator(Family f, long n) {
  Real d(1L);
  for (long s : shifts(f)) d *= n + s;
  return d;
}

// sum_{k=1}^n 1/(k+x)^power, directly for small n and through H otherwise.
Complex shifted_reciprocal_sum(const Complex& x, long n, int power) {
  if (n <= kExactWeightLimit) {
    Complex s;
    for (long k = 1; k <= n; ++k) {
      Complex r = inverse(x + k);
      s += power == 1 ? r : r * r;
    }
    return s;
  }
  Complex top = x + n;
  return power == 1 ? harmonic_at(top) - harmonic_at(x) : harmonic2_at(top) - harmonic2_at(x);
}

Complex half(long m) { return Complex(Real(m) - Real(0.5)); }

// O_N and O_N^(2) - O_m^(2) style quantities for the half-integer weights.
Complex odd_harmonic_at(long N) {
  if (N <= kExactWeightLimit) return Complex(Real(harmonic::odd_harmonic(1, N)));
  // O_N = (H_{N-1/2} + 2 ln 2) / 2
  return (harmonic_at(half(N)) + Complex(2L * specfun::constants().ln2)) / 2L;
}

Complex odd_difference(long m, long N, int power) {
  if (N <= kExactWeightLimit) {
    return Complex(Real(harmonic::odd_harmonic(power, N) - harmonic::odd_harmonic(power, m)));
  }
  if (power == 1) return (harmonic_at(half(N)) - harmonic_at(half(m))) / 2L;
  return (harmonic2_at(half(N)) - harmonic2_at(half(m))) / 4L;
}

Complex weight_at(const SeriesSpec& spec, long n) {
  const Complex x = spec.effective_z();
  switch (spec.weight.kind) {
    case Weight::Kind::One: return Complex(1L);
    case Weight::Kind::HShift: return harmonic_at(x + n);
    case Weight::Kind::HDiff: return shifted_reciprocal_sum(x, n, 1);
    case Weight::Kind::QDiff: {
      Complex d1 = shifted_reciprocal_sum(x, n, 1);
      return d1 * d1 + shifted_reciprocal_sum(x, n, 2);
    }
    case Weight::Kind::OShift: {
      const long m = std::get<HalfIntegerArg>(spec.argument).m;
      return odd_harmonic_at(n + m);
    }
    case Weight::Kind::QOdd: {
      const long m = std::get<HalfIntegerArg>(spec.argument).m;
      Complex e1 = odd_difference(m, n + m, 1);
      return e1 * e1 + odd_difference(m, n + m, 2);
    }
    case Weight::Kind::HPlain: {
      if (n <= kExactWeightLimit) return Complex(Real(harmonic::exact_gen_harmonic(spec.weight.order, n)));
      return harmonic::gen_harmonic(spec.weight.order, Complex(n));
    }
  }
  return Complex(1L);
}

// Real part first, then imaginary; Neumaier step on one component.
void neumaier(Real& sum, Real& comp, const Real& x) {
  Real t = sum + x;
  if (mpfr_cmpabs(sum.get(), x.get()) >= 0) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = std::move(t);
}

// Geometric grid g_i = round(16 * 2^(i/6)); multiples of 6 land on 16 * 2^k.
long grid_point(int i) {
  return std::lround(static_cast<double>(kGridBase) * std::exp2(static_cast<double>(i) / kGridPerOctave));
}

int grid_index(long N) {
  return static_cast<int>(std::lround(std::log2(static_cast<double>(N) / kGridBase) * kGridPerOctave));
}

// Solves A x = b (complex, dense) by Gaussian elimination with partial pivoting.
std::vector<Complex> solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    Real best = abs(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Real v = abs(a[r][col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best.is_zero()) throw ConvergenceError("singular extrapolation system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex f = a[r][col] / a[col][col];
      if (f == Complex()) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

struct Extrapolator {
  const std::map<long, Complex>& partials;
  Complex alpha;
  long L;

  // Limit estimate from grid points in [top/8, top] with K+1 power terms.
  Complex estimate(long top, long K) const {
    const long M = 1 + (K + 1) * (L + 1);
    const int hi = grid_index(top);
    const int lo = hi - kWindowOctaves * kGridPerOctave;
    const int span = hi - lo;
    PrecisionScope scope(guarded(kSolveGuardBits - kGuardBits));
    const Real log_top = log(Real(top));
    std::vector<std::vector<Complex>> a;
    std::vector<Complex> b;
    for (long i = 0; i < M; ++i) {
      const int idx = lo + static_cast<int>(std::lround(static_cast<double>(i) * span / (M - 1)));
      const long N = grid_point(idx);
      auto it = partials.find(N);
      if (it == partials.end()) throw ConvergenceError("missing partial sum on the sampling grid");
      const Real ln_ratio = log(Real(N)) - log_top;
      const Real log_scaled = log(Real(N)) / log_top;
      std::vector<Complex> row;
      row.reserve(static_cast<std::size_t>(M));
      row.emplace_back(1L);
      for (long k = 0; k <= K; ++k) {
        Complex base = exp(-(alpha + k) * ln_ratio);
        Real lp(1L);
        for (long j = 0; j <= L; ++j) {
          row.push_back(base * lp);
          lp *= log_scaled;
        }
      }
      a.push_back(std::move(row));
      b.push_back(it->second);
    }
    return solve(std::move(a), std::move(b)).front();
  }
};

std::vector<long> k_candidates(long L) {
  switch (L) {
    case 0: return {3, 5, 7};
    case 1: return {2, 3, 4, 5};
    default: return {2, 3, 4};
  }
}

Real relative_scale(const Complex& v) {
  Real a = abs(v);
  return a.is_zero() ? Real(1L) : a;
}

std::string context(const SeriesSpec& spec) { return " [" + to_string(spec) + "]"; }

}  // namespace

const std::vector<long>& shifts(Family f) {
  static const std::map<Family, std::vector<long>> table{
      {Family::P2, {0, 0}},      {Family::P12, {0, 1}},          {Family::P13, {0, 2}},
      {Family::P14, {0, 3}},     {Family::P123, {0, 1, 2}},      {Family::P1234, {0, 1, 2, 3}},
      {Family::N3, {0, 0, 0}},   {Family::N4, {0, 0, 0, 0}}};
  return table.at(f);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::P2: return "n^2";
    case Family::P12: return "n(n+1)";
    case Family::P13: return "n(n+2)";
    case Family::P14: return "n(n+3)";
    case Family::P123: return "n(n+1)(n+2)";
    case Family::P1234: return "n(n+1)(n+2)(n+3)";
    case Family::N3: return "n^3";
    case Family::N4: return "n^4";
  }
  return "?";
}

std::string to_string(const Weight& w) {
  switch (w.kind) {
    case Weight::Kind::One: return "1";
    case Weight::Kind::HShift: return "H_{n+z}";
    case Weight::Kind::HDiff: return "H_{n+z}-H_z";
    case Weight::Kind::QDiff: return "(H_{n+z}-H_z)^2+H_{n+z}^(2)-H_z^(2)";
    case Weight::Kind::OShift: return "O_{n+m}";
    case Weight::Kind::QOdd: return "(O_{n+m}-O_m)^2+O_{n+m}^(2)-O_m^(2)";
    case Weight::Kind::HPlain: return w.order == 1 ? "H_n" : "H_n^(" + std::to_string(w.order) + ")";
  }
  return "?";
}

Complex SeriesSpec::effective_z() const {
  if (auto* g = std::get_if<GeneralArg>(&argument)) return g->z;
  return half(std::get<HalfIntegerArg>(argument).m);
}

void SeriesSpec::validate() const {
  const bool odd_weight = weight.kind == Weight::Kind::OShift || weight.kind == Weight::Kind::QOdd;
  const bool shifted_weight = weight.kind == Weight::Kind::HShift ||
                              weight.kind == Weight::Kind::HDiff || weight.kind == Weight::Kind::QDiff;
  if (weight.kind == Weight::Kind::HPlain && weight.order < 1) {
    throw DomainError("harmonic weight order must be >= 1");
  }
  if (auto* g = std::get_if<GeneralArg>(&argument)) {
    if (!g->z.is_finite()) throw DomainError("z must be finite");
    if (g->z.re <= -1L) {
      throw DomainError("series converges only for Re(z) > -1, got z=" + hseries::to_string(g->z, 12));
    }
    if (odd_weight) throw DomainError("odd harmonic weights need a half-integer argument");
  } else {
    if (std::get<HalfIntegerArg>(argument).m < 0) throw DomainError("m must be non-negative");
    if (shifted_weight) throw DomainError("shifted harmonic weights need a general argument");
  }
}

std::string to_string(const SeriesSpec& spec) {
  std::string arg = spec.is_half_integer()
                        ? "m=" + std::to_string(std::get<HalfIntegerArg>(spec.argument).m)
                        : "z=" + hseries::to_string(std::get<GeneralArg>(spec.argument).z, 6);
  return "sum " + to_string(spec.weight) + " / (" + to_string(spec.family) + ") kernel, " + arg;
}

Complex general_kernel(const Complex& z, long n) {
  if (n < 0) throw DomainError("kernel index must be non-negative");
  if (z.is_integer() && z.re < 0L) throw DomainError("1/C(n+z, n) needs z outside the negative integers");
  if (z.is_integer() && z.re <= 1'000'000L) {
    BigInt b = binomial(n + z.re.to_long(), n);
    return Complex(Real(BigRational(BigInt(1), b)));
  }
  Complex out;
  {
    PrecisionScope scope(guarded(kGuardBits));
    Complex k(1L);
    if (n <= kDirectLimit) {
      for (long i = 1; i <= n; ++i) k *= Complex(i) / (z + i);
    } else {
      k = exp(specfun::ln_gamma(Complex(n + 1)) + specfun::ln_gamma(z + 1L) -
              specfun::ln_gamma(z + (n + 1)));
      if (z.is_real()) k.im = Real();
    }
    out = k;
  }
  return to_working_precision(out);
}

Real half_integer_kernel(long m, long n) {
  if (m < 0 || n < 0) throw DomainError("half-integer kernel needs m, n >= 0");
  const long N = n + m;
  if (N <= kDirectLimit) {
    BigRational v = pow2(2 * n) / BigRational(BigInt(binomial(2 * N, N) * binomial(N, m)));
    return Real(v);
  }
  Real out;
  {
    PrecisionScope scope(guarded(kGuardBits));
    auto lg = [](long x) { return specfun::ln_gamma(Complex(x)).re; };
    Real l = Real(2 * n) * const_log2() - lg(2 * N + 1) + lg(N + 1) + lg(m + 1) + lg(n + 1);
    out = exp(l);
  }
  return to_working_precision(out);
}

Complex term(const SeriesSpec& spec, long n) {
  spec.validate();
  if (n < 1) throw DomainError("term index must be >= 1");
  Complex out;
  {
    PrecisionScope scope(guarded(kGuardBits));
    Complex kernel;
    if (auto* g = std::get_if<GeneralArg>(&spec.argument)) {
      kernel = general_kernel(g->z, n);
    } else {
      kernel = Complex(half_integer_kernel(std::get<HalfIntegerArg>(spec.argument).m, n));
    }
    out = kernel * weight_at(spec, n) / denominator(spec.family, n);
  }
  return to_working_precision(out);
}

void CompensatedSum::add(const Complex& x) {
  neumaier(sum_re_, comp_re_, x.re);
  if (!x.im.is_zero() || !sum_im_.is_zero()) neumaier(sum_im_, comp_im_, x.im);
}

Complex CompensatedSum::value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

TermStream::TermStream(const SeriesSpec& spec) : spec_(spec) {
  spec_.validate();
  x_ = spec_.effective_z();
  if (spec_.is_half_integer()) {
    const long m = std::get<HalfIntegerArg>(spec_.argument).m;
    kernel_ = Complex(Real(BigRational(BigInt(1), binomial(2 * m, m))));
    if (spec_.weight.kind == Weight::Kind::OShift) seed_ = Complex(Real(harmonic::odd_harmonic(1, m)));
  } else {
    kernel_ = Complex(1L);
    if (spec_.weight.kind == Weight::Kind::HShift) seed_ = harmonic::harmonic(x_);
  }
}

const Complex& TermStream::next() {
  ++n_;
  const Complex shifted = x_ + n_;
  kernel_ *= Complex(n_) / shifted;
  Complex w;
  const auto kind = spec_.weight.kind;
  if (kind == Weight::Kind::HPlain) {
    plain_ += pow(Real(n_), -spec_.weight.order);
    w = Complex(plain_);
  } else if (kind == Weight::Kind::One) {
    w = Complex(1L);
  } else {
    Complex r = inverse(shifted);
    a1_ += r;
    if (kind == Weight::Kind::QDiff || kind == Weight::Kind::QOdd) a2_ += r * r;
    switch (kind) {
      case Weight::Kind::HShift: w = seed_ + a1_; break;
      case Weight::Kind::HDiff: w = a1_; break;
      case Weight::Kind::QDiff: w = a1_ * a1_ + a2_; break;
      case Weight::Kind::OShift: w = seed_ + a1_ / 2L; break;
      default: {  // QOdd
        Complex h = a1_ / 2L;
        w = h * h + a2_ / 4L;
      }
    }
  }
  current_ = kernel_ * w / denominator(spec_.family, n_);
  return current_;
}

Complex partial_sum(const SeriesSpec& spec, long N) {
  if (N < 1) throw DomainError("partial sum needs N >= 1");
  Complex out;
  {
    PrecisionScope scope(guarded(kGuardBits));
    TermStream stream(spec);
    CompensatedSum acc;
    for (long n = 1; n <= N; ++n) acc.add(stream.next());
    out = acc.value();
  }
  return to_working_precision(out);
}

long log_degree(const SeriesSpec& spec) {
  switch (spec.weight.kind) {
    case Weight::Kind::One: return 0;
    case Weight::Kind::HShift:
    case Weight::Kind::HDiff:
    case Weight::Kind::OShift: return 1;
    case Weight::Kind::QDiff:
    case Weight::Kind::QOdd: return 2;
    case Weight::Kind::HPlain: return spec.weight.order == 1 ? 1 : 0;
  }
  return 0;
}

Real tail_estimate_from_terms(const std::vector<Real>& magnitudes, long N, long log_degree) {
  if (magnitudes.size() != 8) throw DomainError("tail estimate needs exactly 8 term magnitudes");
  if (N < 9) throw DomainError("tail estimate needs N >= 9");
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    if (magnitudes[i].is_zero() || (i > 0 && !(magnitudes[i] < magnitudes[i - 1]))) {
      throw EstimateUnavailable("terms are not strictly decreasing in magnitude at N=" + std::to_string(N));
    }
  }
  // Least squares for ln|t_n| - q ln ln n = ln C - p ln n.
  const long first = N - 7;
  Real sx, sy, sxx, sxy;
  for (long i = 0; i < 8; ++i) {
    Real ln_n = log(Real(first + i));
    Real y = log(magnitudes[static_cast<std::size_t>(i)]);
    if (log_degree > 0) y -= Real(log_degree) * log(ln_n);
    sx += ln_n;
    sy += y;
    sxx += ln_n * ln_n;
    sxy += ln_n * y;
  }
  Real slope = (8L * sxy - sx * sy) / (8L * sxx - sx * sx);
  Real ln_c = (sy - slope * sx) / 8L;
  Real p = -slope;
  if (p <= 1L) throw EstimateUnavailable("fitted decay n^-p with p <= 1 at N=" + std::to_string(N));
  // integral_{N+1}^inf x^-p ln^q x dx = e^(-s a) sum_i q!/(q-i)! a^(q-i) / s^(i+1), s = p-1, a = ln(N+1)
  const Real s = p - 1L;
  const Real a = log(Real(N + 1));
  Real sum;
  Real falling(1L);
  for (long i = 0; i <= log_degree; ++i) {
    sum += falling * pow(a, log_degree - i) / pow(s, i + 1);
    falling *= log_degree - i;
  }
  return 4L * exp(ln_c - s * a) * sum;
}

Real tail_estimate(const SeriesSpec& spec, long N) {
  spec.validate();
  if (N < 9) throw DomainError("tail estimate needs N >= 9");
  std::vector<Real> mags;
  for (long n = N - 7; n <= N; ++n) mags.push_back(abs(term(spec, n)));
  return tail_estimate_from_terms(mags, N, log_degree(spec));
}

SumResult sum_to_tolerance(const SeriesSpec& spec, const PrecisionContext& ctx) {
  ContextScope ctx_scope(ctx);
  spec.validate();
  const long max_terms = static_cast<long>(std::min<std::size_t>(ctx.max_terms, 1'000'000'000));
  const Real tol(ctx.target_tol);
  const long L = log_degree(spec);
  const Complex alpha = Complex(Real(static_cast<long>(shifts(spec.family).size()) - 1)) + spec.effective_z();

  std::optional<SumResult> accepted;
  Real best_err;
  bool have_best = false;
  {
    PrecisionScope scope(guarded(kGuardBits));
    TermStream stream(spec);
    CompensatedSum acc;
    std::map<long, Complex> grid;
    std::vector<Complex> recent(8);
    int next_grid = 0;
    long next_level = kFirstLevel;
    const Extrapolator extrapolator{grid, alpha, L};

    auto try_truncation = [&](long N, const Complex& S) -> bool {
      if (N < 9) return false;
      std::vector<Real> mags;
      for (long i = 0; i < 8; ++i) mags.push_back(abs(recent[static_cast<std::size_t>((N - 7 + i) % 8)]));
      try {
        Real E = tail_estimate_from_terms(mags, N, L);
        if (E <= tol * relative_scale(S)) {
          accepted = SumResult{S, static_cast<std::size_t>(N), E, false, E / relative_scale(S)};
          return true;
        }
      } catch (const EstimateUnavailable&) {
      }
      return false;
    };

    for (long n = 1; n <= max_terms; ++n) {
      const Complex& t = stream.next();
      recent[static_cast<std::size_t>(n % 8)] = t;
      acc.add(t);
      while (grid_point(next_grid) < n) ++next_grid;
      if (grid_point(next_grid) == n) {
        grid.emplace(n, acc.value());
        ++next_grid;
      }
      if (n == next_level) {
        next_level *= 2;
        const Complex S = acc.value();
        if (try_truncation(n, S)) break;
        for (long K : k_candidates(L)) {
          Complex hi, lo;
          try {
            hi = extrapolator.estimate(n, K);
            lo = extrapolator.estimate(n / 2, K);
          } catch (const ConvergenceError&) {
            continue;
          }
          Real err = abs(hi - lo);
          if (!have_best || err < best_err) {
            best_err = err;
            have_best = true;
            Real rel = err / relative_scale(hi);
            if (rel <= tol) {
              accepted = SumResult{hi, static_cast<std::size_t>(n), abs(hi - S), true, rel};
            }
          }
        }
        if (accepted) break;
        have_best = false;
      } else if (n == max_terms) {
        if (try_truncation(n, acc.value())) break;
      }
    }
  }
  if (!accepted) {
    throw ConvergenceError("could not reach relative tolerance " + to_string(tol, 3) + " within " +
                           std::to_string(max_terms) + " terms" + context(spec));
  }
  SumResult r = *accepted;
  r.value = to_working_precision(r.value);
  r.tail_estimate = to_working_precision(r.tail_estimate);
  r.achieved_tol = to_working_precision(r.achieved_tol);
  return r;
}

namespace {

// Levin u-transform (beta = 1) of s_0..s_k.
std::optional<Complex> levin_u(const std::vector<Complex>& s, std::size_t k) {
  Complex num, den;
  const Real top(static_cast<long>(k + 1));
  for (std::size_t j = 0; j <= k; ++j) {
    Complex a = j == 0 ? s[0] : s[j] - s[j - 1];
    if (a == Complex()) return std::nullopt;
    Complex omega = a * Real(static_cast<long>(j + 1));
    Real c = Real(binomial(static_cast<long>(k), static_cast<long>(j))) *
             pow(Real(static_cast<long>(j + 1)) / top, static_cast<long>(k) - 1);
    if (j % 2 == 1) c = -c;
    Complex w = Complex(c) / omega;
    num += w * s[j];
    den += w;
  }
  if (den == Complex()) return std::nullopt;
  return num / den;
}

// Neville extrapolation to h = 0 at h_j = 1/(j+1) using the last `count` values.
Complex richardson(const std::vector<Complex>& s, std::size_t count) {
  const std::size_t n = s.size();
  const std::size_t first = n - count;
  std::vector<Complex> p(s.begin() + static_cast<long>(first), s.end());
  std::vector<Real> h;
  for (std::size_t j = first; j < n; ++j) h.push_back(Real(1L) / Real(static_cast<long>(j + 1)));
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = 0; i + level < count; ++i) {
      // P(0) from neighbouring interpolants on h[i..i+level]
      p[i] = (p[i + 1] * h[i] - p[i] * h[i + level]) / (h[i] - h[i + level]);
    }
  }
  return p[0];
}

}  // namespace

Complex accelerate(const std::vector<Complex>& partials, const PrecisionContext& ctx) {
  ContextScope ctx_scope(ctx);
  if (partials.size() < 8) throw DomainError("acceleration needs at least 8 partial sums");
  const std::size_t n = partials.size();
  if (std::all_of(partials.begin(), partials.end(), [&](const Complex& v) { return v == partials[0]; })) {
    return partials[0];
  }
  const Real tol(ctx.target_tol);
  Complex result;
  bool ok = false;
  {
    PrecisionScope scope(guarded(kSolveGuardBits + 2 * static_cast<long>(n)));
    std::vector<Complex> s;
    for (const auto& v : partials) s.push_back(Complex(v.re + 0L, v.im + 0L));
    auto t1 = levin_u(s, n - 1);
    auto t0 = levin_u(s, n - 2);
    if (t1 && t0 && abs(*t1 - *t0) <= tol * relative_scale(*t1)) {
      result = *t1;
      ok = true;
    } else {
      const std::size_t count = std::min<std::size_t>(n, 8);
      Complex r1 = richardson(s, count);
      Complex r0 = richardson(s, count - 1);
      if (abs(r1 - r0) <= tol * relative_scale(r1)) {
        result = r1;
        ok = true;
      }
    }
  }
  if (!ok) throw AccelerationDiverged("successive transform estimates disagree beyond tolerance");
  return to_working_precision(result);
}

}  // namespace hseries::series
