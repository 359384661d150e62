#include "hseries/catalog.hpp"

#include <gtest/gtest.h>

#include <set>

#include "../tests/support.hpp"
#include "hseries/errors.hpp"
#include "hseries/harmonic.hpp"
#include "hseries/specfun.hpp"

using namespace hseries;
using namespace hseries::catalog;
using hseries::testing::Q;
using hseries::testing::rel_error;

namespace {

class Catalog : public ::testing::Test {
 protected:
  PrecisionScope scope{128};
  PrecisionContext ctx;
  const specfun::Constants& k = specfun::constants();
  void SetUp() override {
    ctx.mantissa_bits = 128;
    ctx.target_tol = 1e-10;
  }
};

TEST_F(Catalog, RegistryContainsRequiredIds) {
  const std::vector<std::string> required = {
      "main", "thm2", "thm2.m0", "thm3", "thm3.euler", "thm3.b4jk2f8", "thm3.third", "cor1", "quad.z",
      "quad.hyyfilz", "quad.odd", "sym.pq", "sym.pp", "h2n2", "bowen", "lem.bhasxe8", "thm.halfP12",
      "thm.halfP12.m0", "thm.halfP12.m1", "thm.halfP12.m2", "thm.pwogiuk", "thm.pwogiuk.tgvrkzb",
      "thm.pwogiuk.v8qrbaf", "rem.n2n12", "cor.halfP12odd", "cor.halfP12odd.m0", "cor.halfP12odd.m1",
      "quad.P12", "quad.P12.v82402j", "quad.P12.odd", "rem.xu", "h2.P12", "lem.lmcv0zf", "lem.dhruknq",
      "thm.halfP123", "thm.l2ciolu", "thm.halfP123odd", "quad.P123", "lem.vadi1jm", "eq.pv5xq4g",
      "thm.halfP1234", "thm.qaytndb", "thm.halfP1234odd", "quad.P1234", "frisch", "bs", "lemma1.1",
      "lemma1.2", "lemma1.3", "lemma1.4", "lemma1.5", "lemma2.A", "lemma2.B", "lemma2.C", "lemma2.D",
      "lemma2.E", "lemma2.F", "wsum.j0", "wsum.j1", "wsum.j2"};
  std::set<std::string> ids;
  for (const auto& r : list_identities()) ids.insert(r.id);
  for (const auto& id : required) EXPECT_TRUE(ids.count(id)) << id;
  // Families with a stated number of particulars.
  auto children = [&](const std::string& parent) {
    return std::count_if(ids.begin(), ids.end(),
                         [&](const std::string& s) { return s.rfind(parent + ".", 0) == 0; });
  };
  EXPECT_GE(children("thm.halfP123"), 3);
  EXPECT_GE(children("thm.l2ciolu"), 2);
  EXPECT_GE(children("thm.halfP123odd"), 2);
  EXPECT_GE(children("quad.P123"), 2);
  EXPECT_GE(children("thm.halfP1234"), 3);
  EXPECT_GE(children("thm.qaytndb"), 1);
  EXPECT_GE(children("thm.halfP1234odd"), 2);
  EXPECT_GE(children("quad.P1234"), 2);
  EXPECT_GE(list_identities().size(), 55u);
}

TEST_F(Catalog, RecordsAreWellFormed) {
  std::set<std::string> seen;
  const auto& all = list_identities();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& r = all[i];
    EXPECT_TRUE(seen.insert(r.id).second) << "duplicate " << r.id;
    if (i) {
      EXPECT_LT(all[i - 1].id, r.id);
    }
    EXPECT_FALSE(r.provenance.empty()) << r.id;
    EXPECT_FALSE(r.domain.empty()) << r.id;
    EXPECT_FALSE(r.lhs_text.empty()) << r.id;
    EXPECT_FALSE(r.rhs_text.empty()) << r.id;
    EXPECT_FALSE(r.canonical_params.empty()) << r.id;
    EXPECT_EQ(r.exact_available, r.kind == Kind::FiniteSum) << r.id;
    for (const auto& p : r.canonical_params) {
      EXPECT_EQ(p.size(), r.param_names.size()) << r.id;
      for (const auto& n : r.param_names) EXPECT_TRUE(p.count(n)) << r.id << " missing " << n;
    }
  }
}

TEST_F(Catalog, Lookup) {
  EXPECT_EQ(lookup("main").provenance, "main");
  EXPECT_EQ(lookup("main").kind, Kind::InfiniteSeries);
  EXPECT_EQ(lookup("bowen").kind, Kind::DerivedScalar);
  EXPECT_THROW(lookup("nonexistent"), NotFound);
  EXPECT_THROW(closed_form("nonexistent", {}), NotFound);
}

TEST_F(Catalog, ClosedFormExamples) {
  EXPECT_LE(rel_error(closed_form("main", make_params({{"z", "0"}})), Complex(k.zeta2)), Real(1e-35));
  EXPECT_LE(rel_error(closed_form("main", make_params({{"z", "1"}})), Complex(k.zeta2 - 1L)), Real(1e-35));
  EXPECT_LE(rel_error(closed_form("lem.bhasxe8", make_params({{"z", "1"}})), Complex(2L - k.zeta2)), Real(1e-35));
  EXPECT_NEAR(closed_form("main", make_params({{"z", "0"}})).re.to_double(), 1.6449340668, 1e-10);
  EXPECT_NEAR(closed_form("lem.bhasxe8", make_params({{"z", "1"}})).re.to_double(), 0.3550659332, 1e-10);
}

TEST_F(Catalog, ClosedFormDomain) {
  EXPECT_THROW(closed_form("main", make_params({{"z", "-2"}})), DomainError);
  EXPECT_THROW(closed_form("main", {}), DomainError);
  EXPECT_THROW(closed_form("main", make_params({{"z", "1"}, {"m", "2"}})), DomainError);
  EXPECT_THROW(closed_form("thm2", make_params({{"m", "1/2"}})), DomainError);
  EXPECT_THROW(closed_form("thm2", make_params({{"m", "-1"}})), DomainError);
  // Right-hand side stays evaluable where the series diverges.
  Complex v = closed_form("main", make_params({{"z", "-3/2"}}));
  Complex want = Complex(k.zeta2) - harmonic::gen_harmonic(2, Complex(Q(-3, 2)));
  EXPECT_LE(rel_error(v, want), Real(1e-35));
}

TEST_F(Catalog, ErrorsCarryIdentityId) {
  try {
    closed_form("main", make_params({{"z", "-2"}}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("main: ", 0), 0u) << e.what();
  }
  PrecisionContext tiny = ctx;
  tiny.max_terms = 100;
  try {
    verify("thm2.m0", {}, tiny);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("thm2.m0: ", 0), 0u) << e.what();
  }
  EXPECT_THROW(verify("main", make_params({{"z", "-3/2"}}), ctx), DomainError);
}

TEST_F(Catalog, VerifyExamples) {
  VerificationReport euler = verify("thm3.euler", {}, ctx);
  EXPECT_TRUE(euler.passed);
  EXPECT_NEAR(euler.rhs.re.to_double(), 2.4041138063, 1e-10);
  EXPECT_LE(euler.rel_error, Real(1e-10));
  EXPECT_GT(euler.terms_used, 0u);

  VerificationReport bowen = verify("bowen", {}, ctx);
  EXPECT_TRUE(bowen.passed);
  EXPECT_NEAR(bowen.lhs.re.to_double(), 4.5998737434, 1e-9);
  EXPECT_LE(bowen.rel_error, Real(1e-9));

  VerificationReport cplx = verify("main", make_params({{"z", "0.3+0.7i"}}), ctx);
  EXPECT_TRUE(cplx.passed);
  EXPECT_LE(cplx.rel_error, Real(1e-10));
  EXPECT_FALSE(cplx.lhs.im.is_zero());
  EXPECT_EQ(cplx.id, "main");
  EXPECT_EQ(cplx.provenance, "main");
}

TEST_F(Catalog, VerdictFollowsThreshold) {
  for (const char* id : {"main", "thm2", "frisch", "bowen", "lemma1.5"}) {
    for (const auto& p : lookup(id).canonical_params) {
      VerificationReport r = verify(id, p, ctx);
      Real bound = max(Real(ctx.target_tol), 100L * r.achieved_tol);
      bool by_abs = r.rhs.re.is_zero() && r.rhs.im.is_zero();
      if (by_abs) {
        EXPECT_EQ(r.passed, r.abs_error <= Real(1e-12)) << id;
      } else {
        EXPECT_EQ(r.threshold, bound) << id;
        EXPECT_EQ(r.passed, r.rel_error <= bound) << id;
      }
      EXPECT_EQ(r.abs_error, abs(r.lhs - r.rhs));
    }
  }
}

TEST_F(Catalog, VerifyExactExamples) {
  ExactReport f = verify_exact("frisch", make_params({{"n", "2"}, {"z", "1"}}));
  EXPECT_TRUE(f.equal);
  ASSERT_EQ(f.lhs.size(), 1u);
  EXPECT_EQ(f.lhs[0], make_rational(1, 3));
  EXPECT_EQ(f.rhs[0], make_rational(1, 3));

  ExactReport b = verify_exact("bs", make_params({{"m", "3"}, {"n", "2"}}));
  EXPECT_TRUE(b.equal);
  EXPECT_EQ(b.lhs[0], make_rational(3, 5));

  ExactReport w = verify_exact("wsum.j2", make_params({{"r", "2"}}));
  EXPECT_TRUE(w.equal);
  EXPECT_EQ(w.lhs[0], make_rational(6, 1));

  EXPECT_THROW(verify_exact("main", make_params({{"z", "0"}})), KindError);
  EXPECT_THROW(verify_exact("bowen", {}), KindError);
  EXPECT_THROW(verify_exact("frisch", make_params({{"n", "4"}, {"z", "0.3+0.7i"}})), DomainError);
}

TEST_F(Catalog, LemmaOneComparesCoefficientVectors) {
  ExactReport r = verify_exact("lemma1.1", make_params({{"k", "5"}}));
  EXPECT_TRUE(r.equal);
  ASSERT_EQ(r.basis.size(), r.lhs.size());
  ASSERT_EQ(r.basis.size(), 5u);
  EXPECT_EQ(r.basis[1], "ln2");
  EXPECT_EQ(r.lhs[1], make_rational(-2, 1));
  EXPECT_EQ(r.lhs[0], BigRational(2 * harmonic::odd_harmonic(1, 5)));
  ExactReport four = verify_exact("lemma1.4", {});
  EXPECT_TRUE(four.equal);
  EXPECT_EQ(four.lhs[4], make_rational(-14, 1));
  for (long m = 0; m <= 3; ++m) {
    for (long kk = 0; kk <= 12; ++kk) {
      ExactReport e = verify_exact("lemma1.5", make_params({{"m", std::to_string(m).c_str()},
                                                            {"k", std::to_string(kk).c_str()}}));
      EXPECT_TRUE(e.equal) << m << " " << kk;
    }
  }
}

TEST_F(Catalog, SweepExamples) {
  std::vector<Params> grid;
  for (const char* z : {"0", "1/2", "1", "3/2", "2", "5/2"}) grid.push_back(make_params({{"z", z}}));
  auto main_reports = sweep("main", grid, ctx);
  ASSERT_EQ(main_reports.size(), 6u);
  for (const auto& r : main_reports) EXPECT_TRUE(r.passed) << to_string(r.params);

  grid.clear();
  for (const char* m : {"0", "1", "2", "3"}) grid.push_back(make_params({{"m", m}}));
  auto thm2 = sweep("thm2", grid, ctx);
  ASSERT_EQ(thm2.size(), 4u);
  for (const auto& r : thm2) EXPECT_TRUE(r.passed);

  grid = {make_params({{"z", "1"}}), make_params({{"z", "-2"}}), make_params({{"z", "2"}})};
  auto mixed = sweep("main", grid, ctx);
  ASSERT_EQ(mixed.size(), 3u);
  EXPECT_TRUE(mixed[0].passed);
  EXPECT_FALSE(mixed[1].passed);
  EXPECT_EQ(mixed[1].error_kind, "DomainError");
  EXPECT_FALSE(mixed[1].error_message.empty());
  EXPECT_TRUE(mixed[2].passed);
  EXPECT_THROW(sweep("nonexistent", grid, ctx), NotFound);
}

TEST_F(Catalog, DifferentiationConsistency) {
  // zeta(2) - H_z^(2) = psi'(z+1), so its z-derivative is -2 (zeta(3) - H_z^(3)).
  const Real h(1e-4);
  for (const Real& z : {Q(1, 2), Q(3, 2)}) {
    auto rhs_main = [&](const Real& x) {
      Params p;
      p["z"] = ParamValue{"x", Complex(x), std::nullopt};
      return closed_form("main", p).re;
    };
    Real derivative = (rhs_main(z - h) - rhs_main(z + h)) / (2L * h);
    Real want = 2L * (k.zeta3 - harmonic::gen_harmonic(3, Complex(z)).re);
    EXPECT_LE(rel_error(derivative, want), Real(1e-6)) << to_string(z, 4);
    // Differentiating 1/C(n+z,n) termwise gives the H_diff series, same value.
    Params p;
    p["z"] = ParamValue{"z", Complex(z), std::nullopt};
    VerificationReport r = verify("eq.lchpe3r", p, ctx);
    EXPECT_TRUE(r.passed);
    EXPECT_LE(rel_error(r.lhs.re, want), Real(1e-10));
  }
}

TEST_F(Catalog, SymmetryRelation) {
  for (auto [p, q] : {std::pair{"2", "3"}, std::pair{"2", "4"}, std::pair{"3", "4"}}) {
    VerificationReport r = verify("sym.pq", make_params({{"p", p}, {"q", q}}), ctx);
    EXPECT_TRUE(r.passed) << p << q;
    EXPECT_LE(r.rel_error, Real(1e-10));
    long pp = std::stol(p), qq = std::stol(q);
    Real want = specfun::zeta(pp) * specfun::zeta(qq) + specfun::zeta(pp + qq);
    EXPECT_LE(rel_error(r.rhs.re, want), Real(1e-35));
  }
  EXPECT_THROW(verify("sym.pq", make_params({{"p", "2"}, {"q", "5"}}), ctx), DomainError);
}

TEST_F(Catalog, SpecializationsAgree) {
  VerificationReport general = verify("thm3", make_params({{"z", "1"}}), ctx);
  VerificationReport particular = verify("thm3.b4jk2f8", {}, ctx);
  EXPECT_TRUE(general.passed);
  EXPECT_TRUE(particular.passed);
  // sum H_{n+1}/(n^2 (n+1)) = sum H_n/(n^2(n+1)) + sum 1/(n^2 (n+1)^2), the latter being 2 zeta(2) - 3.
  EXPECT_LE(rel_error(general.rhs.re, particular.rhs.re + 2L * k.zeta2 - 3L), Real(1e-35));
  VerificationReport z0 = verify("thm3", make_params({{"z", "0"}}), ctx);
  VerificationReport euler = verify("thm3.euler", {}, ctx);
  EXPECT_LE(rel_error(z0.rhs, euler.rhs), Real(1e-35));
}

TEST_F(Catalog, EveryIdentityPassesAtCanonicalParameters) {
  std::size_t points = 0;
  for (const auto& r : list_identities()) {
    for (const auto& p : r.canonical_params) {
      VerificationReport v = verify(r.id, p, ctx);
      EXPECT_TRUE(v.passed) << r.id << " {" << to_string(p) << "} rel " << to_string(v.rel_error, 4);
      ++points;
    }
  }
  EXPECT_GT(points, 200u);
}

TEST_F(Catalog, PrintedOddParticularIsOffByAPowerOfPi) {
  // The n^2 odd particular evaluates to pi^4/4; pi^2/4 does not match the series.
  VerificationReport r = verify("quad.odd", {}, ctx);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(rel_error(r.lhs.re, k.pi * k.pi * k.pi * k.pi / 4L), Real(1e-10));
  EXPECT_GT(rel_error(r.lhs.re, k.pi * k.pi / 4L), Real(1));
  EXPECT_NEAR(r.lhs.re.to_double(), 24.3522727585, 1e-9);
}

TEST_F(Catalog, ZetaFourPrintedConstants) {
  // zeta(4) is stored as pi^4/90; particulars quoted with pi agree.
  EXPECT_LE(rel_error(closed_form("h2n2", {}).re, 7L * k.pi * k.pi * k.pi * k.pi / 360L), Real(1e-35));
  EXPECT_LE(rel_error(closed_form("quad.hyyfilz", {}).re, k.pi * k.pi * k.pi * k.pi / 15L), Real(1e-35));
  EXPECT_NEAR(closed_form("bowen", {}).re.to_double(), 4.59987374327, 1e-11);
}

TEST_F(Catalog, RegistryJson) {
  nlohmann::json j = registry_json();
  EXPECT_EQ(j.at("schema_version"), kRegistrySchemaVersion);
  const auto& ids = j.at("identities");
  ASSERT_EQ(ids.size(), list_identities().size());
  for (const auto& e : ids) {
    for (const char* key : {"id", "kind", "provenance", "lhs", "rhs", "params", "domain", "canonical_params", "exact"}) {
      EXPECT_TRUE(e.contains(key)) << key;
    }
  }
  EXPECT_EQ(ids[0].at("id"), list_identities()[0].id);
  EXPECT_EQ(registry_json().dump(), j.dump());
}

TEST_F(Catalog, ParseParam) {
  ParamValue a = parse_param("-7/2");
  ASSERT_TRUE(a.exact.has_value());
  EXPECT_EQ(*a.exact, make_rational(-7, 2));
  EXPECT_EQ(a.value, Complex(Q(-7, 2)));
  EXPECT_EQ(*parse_param("0.25").exact, make_rational(1, 4));
  EXPECT_EQ(*parse_param("3").exact, make_rational(3, 1));
  ParamValue c = parse_param("0.3+0.7i");
  EXPECT_FALSE(c.exact.has_value());
  EXPECT_EQ(c.value.re, Real(Q(3, 10)));
  EXPECT_EQ(c.value.im, Real(Q(7, 10)));
  EXPECT_EQ(parse_param("-2i").value, Complex(Real(0L), Real(-2L)));
  EXPECT_EQ(parse_param("i").value, Complex(Real(0L), Real(1L)));
  EXPECT_EQ(parse_param("1e-3").value.re, Real(Q(1, 1000)));
  for (const char* bad : {"", "abc", "1/0", "1//2", "1+", "2+3", "0.3+0.7j"}) {
    EXPECT_THROW(parse_param(bad), ParseError) << bad;
  }
}

TEST_F(Catalog, ParamsToString) {
  EXPECT_EQ(to_string(make_params({{"z", "1/2"}, {"m", "3"}})), "m=3, z=1/2");
  EXPECT_EQ(to_string(Params{}), "");
}

}  // namespace
