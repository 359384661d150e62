// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hseries/catalog.hpp"
#include "hseries/cli.hpp"
#include "hseries/errors.hpp"
#include "hseries/harmonic.hpp"
#include "hseries/series.hpp"
#include "hseries/specfun.hpp"
#include "support.hpp"

using namespace hseries;
using hseries::testing::Q;
using hseries::testing::rel_error;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string sci(const Real& x) { return to_string(x, 3); }

PrecisionContext ctx_of(double tol) {
  PrecisionContext c;
  c.mantissa_bits = 128;
  c.target_tol = tol;
  return c;
}

// Single verification against an independently computed reference value.
Verdict check_value(const char* id, const catalog::Params& p, const Real& reference, double rel, double tol,
                    double seconds, double elapsed_limit_s) {
  Verdict v;
  catalog::VerificationReport r = catalog::verify(id, p, ctx_of(tol));
  Real err = rel_error(r.lhs, Complex(reference));
  v.require(r.passed, std::string(id) + " verdict FAIL");
  v.require(err <= Real(rel), "rel " + sci(err) + " > " + std::to_string(rel));
  v.require(seconds < elapsed_limit_s, "took " + std::to_string(seconds) + " s");
  char when[48];
  std::snprintf(when, sizeof when, ", %.3f s (limit %.0f s)", seconds, elapsed_limit_s);
  v.detail = "lhs " + to_string(r.lhs.re, 12) + " rel " + sci(err) + when + (v.detail.empty() ? "" : " | " + v.detail);
  return v;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Verdict timed_value(const char* id, const catalog::Params& p, const Real& reference, double rel, double tol,
                    double limit_s) {
  auto t0 = Clock::now();
  catalog::verify(id, p, ctx_of(tol));  // timing run
  double s = since(t0);
  return check_value(id, p, reference, rel, tol, s, limit_s);
}

Verdict criterion1(const specfun::Constants& k) {
  return timed_value("main", catalog::make_params({{"z", "0"}}), k.pi * k.pi / 6L, 1e-10, 1e-10, 1.0);
}

Verdict criterion2(const specfun::Constants&) {
  return timed_value("thm3.euler", {}, 2L * testing::mpfr_zeta_of(3), 1e-10, 1e-10, 2.0);
}

Verdict criterion3(const specfun::Constants& k) {
  Verdict v = timed_value("thm2.m0", {}, k.pi * k.pi / 2L, 1e-8, 1e-8, 5.0);
  v.require(catalog::verify("thm2.m0", {}, ctx_of(1e-8)).accelerated, "not accelerated");
  return v;
}

Verdict criterion4(const specfun::Constants& k) {
  // zeta(4) = pi^4/90 computed here, not taken from the registry.
  Real z4 = k.pi * k.pi * k.pi * k.pi / 90L;
  return timed_value("bowen", {}, 17L * z4 / 4L, 1e-9, 1e-10, 60.0);
}

Verdict criterion5(const specfun::Constants& k) {
  Real reference = k.pi * k.pi / 4L + 7L * testing::mpfr_zeta_of(3) / 2L;
  return timed_value("cor.halfP12odd.m0", {}, reference, 1e-8, 1e-8, 60.0);
}

Verdict criterion6(const specfun::Constants&) {
  Verdict v;
  auto t0 = Clock::now();
  std::ostringstream out, err;
  int code = cli::main_entry({"report", "--format", "json"}, out, err);
  double s = since(t0);
  nlohmann::json j = nlohmann::json::parse(out.str());
  const auto& sum = j.at("summary");
  int ids = sum.at("identities"), ids_ok = sum.at("identities_passed");
  int pts = sum.at("points"), pts_ok = sum.at("points_passed");
  v.require(code == cli::kExitPass, "exit " + std::to_string(code));
  v.require(ids_ok >= 55, "only " + std::to_string(ids_ok) + " identities passed");
  v.require(ids_ok == ids && pts_ok == pts, "failures present");
  v.require(s < 180.0, "too slow");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d identities, %d/%d points, %.2f s", ids_ok, ids, pts_ok, pts, s);
  v.detail = buf + (v.detail.empty() ? std::string() : " | " + v.detail);
  return v;
}

Verdict criterion7(const specfun::Constants&) {
  Verdict v;
  auto t0 = Clock::now();
  long checked = 0, equal = 0;
  std::string first_failure;
  auto run = [&](const char* id, const catalog::Params& p) {
    ++checked;
    bool ok = false;
    try {
      ok = catalog::verify_exact(id, p).equal;
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = e.what();
    }
    if (ok) {
      ++equal;
    } else if (first_failure.empty()) {
      first_failure = std::string(id) + " {" + catalog::to_string(p) + "}";
    }
  };
  auto P = [](std::initializer_list<std::pair<std::string, std::string>> kv) {
    catalog::Params p;
    for (const auto& [name, text] : kv) p[name] = catalog::parse_param(text);
    return p;
  };
  const std::vector<std::string> zs = {"0", "1", "2", "1/2", "1/3", "5/6", "-1/2", "-7/3", "7/4", "-2/5"};
  for (long n = 1; n <= 12; ++n) {
    for (const auto& z : zs) run("frisch", P({{"n", std::to_string(n)}, {"z", z}}));
  }
  const std::vector<std::string> ns = {"2", "3", "5", "1/2", "-1/2", "3/2", "-7/3"};
  for (long m = 1; m <= 20; ++m) {
    for (const auto& n : ns) run("bs", P({{"m", std::to_string(m)}, {"n", n}}));
  }
  for (long u = 0; u <= 10; ++u) {
    for (long w = 0; w <= 10; ++w) {
      const std::string us = std::to_string(u), ws = std::to_string(w);
      if (w <= u) run("lemma2.A", P({{"u", us}, {"v", ws}}));
      if (w >= 1) run("lemma2.C", P({{"u", us}, {"v", ws}}));
      if (w <= u) run("lemma2.D", P({{"u", us}, {"v", ws}}));
      if (w > u) run("lemma2.E", P({{"u", us}, {"v", ws}}));
    }
    run("lemma2.F", P({{"u", std::to_string(u)}}));
  }
  for (const char* id : {"wsum.j0", "wsum.j1", "wsum.j2"}) {
    for (long r = 1; r <= 100; ++r) run(id, P({{"r", std::to_string(r)}}));
  }
  double s = since(t0);
  v.require(equal == checked, "first failure: " + first_failure);
  v.require(s < 10.0, "too slow");
  char buf[120];
  std::snprintf(buf, sizeof buf, "%ld/%ld exact equalities, %.2f s", equal, checked, s);
  v.detail = buf + (v.detail.empty() ? std::string() : " | " + v.detail);
  return v;
}

Verdict criterion8(const specfun::Constants&) {
  Verdict v;
  PrecisionScope scope(128);
  const Real tol(ctx_of(1e-10).target_tol);

  // digamma recurrence on 1000 random complex points
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(0.1, 10.0), im(-10.0, 10.0);
  Real worst;
  for (int i = 0; i < 1000; ++i) {
    Complex z(Real(re(rng)), Real(im(rng)));
    Real d = abs(specfun::digamma(z + 1L) - specfun::digamma(z) - Complex(1L) / z);
    worst = max(worst, d);
  }
  v.require(worst < 10L * tol, "digamma recurrence " + sci(worst));

  // polygamma against central differences of the previous order
  std::uniform_real_distribution<double> pick(0.5, 5.0);
  Real worst_fd;
  for (long r = 1; r <= 3; ++r) {
    for (int i = 0; i < 20; ++i) {
      const Real x(pick(rng));
      const Real h = Real(std::cbrt(1e-10)) * x / 5L;
      Complex fd = (specfun::polygamma(r - 1, Complex(x + h)) - specfun::polygamma(r - 1, Complex(x - h))) /
                   Complex(2L * h);
      worst_fd = max(worst_fd, rel_error(fd, specfun::polygamma(r, Complex(x))));
    }
  }
  v.require(worst_fd <= Real(1e-6), "polygamma finite differences " + sci(worst_fd));

  // half-integer closure, k <= 100, m <= 4
  Real worst_closure;
  for (long m = 1; m <= 4; ++m) {
    for (long kk = 0; kk <= 100; ++kk) {
      Complex a = harmonic::half_integer_harmonic(m, kk);
      Complex b = harmonic::gen_harmonic(m, Complex(Real(kk) - Q(1, 2)));
      worst_closure = max(worst_closure, abs(a - b));
    }
  }
  v.require(worst_closure < 10L * tol, "closure " + sci(worst_closure));

  // log series error decreasing in depth
  bool decreasing = true;
  for (long z : {1L, 2L, 3L}) {
    Real want = specfun::digamma(Complex(z)).re;
    Real prev = abs(specfun::digamma_log_series(Complex(z), 2).re - want);
    for (long depth = 4; depth <= 60; depth += 2) {
      Real e = abs(specfun::digamma_log_series(Complex(z), depth).re - want);
      decreasing = decreasing && e < prev;
      prev = e;
    }
  }
  v.require(decreasing, "log series not decreasing");
  v.detail = "recurrence " + sci(worst) + ", fd " + sci(worst_fd) + ", closure " + sci(worst_closure) +
             (v.detail.empty() ? "" : " | " + v.detail);
  return v;
}

Verdict criterion9(const specfun::Constants&) {
  Verdict v;
  catalog::Params p = catalog::make_params({{"z", "0.3+0.7i"}});
  catalog::VerificationReport r = catalog::verify("main", p, ctx_of(1e-10));
  // Independent right-hand side: zeta(2) - H_z^(2) = psi'(z + 1).
  Complex z = p.at("z").value;
  Complex trigamma = specfun::polygamma(1, z + 1L);
  Real err = rel_error(r.lhs, trigamma);
  v.require(r.passed, "verdict FAIL");
  v.require(r.rel_error <= Real(1e-10), "report rel " + sci(r.rel_error));
  v.require(err <= Real(1e-10), "series vs trigamma " + sci(err));
  v.detail = "lhs " + to_string(r.lhs, 12) + ", rel " + sci(err) + (v.detail.empty() ? "" : " | " + v.detail);
  return v;
}

Verdict criterion10(const specfun::Constants& k) {
  using namespace series;
  Verdict v;
  PrecisionScope scope(192);
  std::string detail;
  auto bracket = [&](const char* name, const Real& est, const Real& truth) {
    Real ratio = est / truth;
    v.require(truth <= est && est <= 4L * truth, std::string(name) + " ratio " + to_string(ratio, 5));
    detail += std::string(detail.empty() ? "" : ", ") + name + " " + to_string(ratio, 5);
  };
  // (a) zeta(2) - H_1000^(2), exact harmonic sum
  Real true_a = specfun::zeta(2) - Real(harmonic::exact_gen_harmonic(2, 1000));
  bracket("P2@1000", tail_estimate({Family::P2, Weight::one(), GeneralArg{Complex(0L)}}, 1000), true_a);
  // (b) telescoping: sum_{n>N} 1/(n(n+1)(n+2)(n+3)) = 1/(3 (N+1)(N+2)(N+3))
  Real true_b = 1L / (3L * Real(101L * 102L * 103L));
  bracket("P1234@100", tail_estimate({Family::P1234, Weight::one(), GeneralArg{Complex(0L)}}, 100), true_b);
  // (c) reference limit pi^2/2 minus the partial sum
  SeriesSpec central{Family::P2, Weight::one(), HalfIntegerArg{0}};
  Real true_c = k.pi * k.pi / 2L - partial_sum(central, 10000).re;
  bracket("half@1e4", tail_estimate(central, 10000), true_c);
  v.detail = "est/true " + detail + (v.detail.empty() ? "" : " | " + v.detail);
  return v;
}

}  // namespace

int main() {
  PrecisionScope scope(128);
  const specfun::Constants& k = specfun::constants();
  const std::vector<std::pair<const char*, std::function<Verdict(const specfun::Constants&)>>> criteria = {
      {"Basel identity main z=0", criterion1},
      {"Euler sum thm3.euler", criterion2},
      {"central binomial thm2.m0", criterion3},
      {"quadratic sum bowen", criterion4},
      {"odd-weight series cor.halfP12odd.m0", criterion5},
      {"full canonical report", criterion6},
      {"exact finite identities", criterion7},
      {"property suites", criterion8},
      {"complex spot check main z=0.3+0.7i", criterion9},
      {"tail estimator honesty", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second(k);
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.ok) ++failures;
    std::printf("criterion %2zu %s: %s (%s)\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
