#include "hseries/harmonic.hpp"

#include <gtest/gtest.h>

#include "../tests/support.hpp"
#include "hseries/errors.hpp"
#include "hseries/specfun.hpp"

using namespace hseries;
using namespace hseries::harmonic;
using hseries::testing::Q;
using hseries::testing::rel_error;

namespace {

class Harmonic : public ::testing::Test {
 protected:
  PrecisionScope scope{128};
  const Real eps = epsilon();
  const specfun::Constants& k = specfun::constants();
};

BigRational R(long p, long q = 1) { return make_rational(p, q); }

TEST_F(Harmonic, HarmonicExamples) {
  EXPECT_LE(abs(harmonic::harmonic(Complex(0L))), 8L * eps);
  EXPECT_LE(rel_error(harmonic::harmonic(Complex(3L)), Complex(Q(11, 6))), 16L * eps);
  const Real half = 2L - 2L * k.ln2;
  EXPECT_LE(rel_error(harmonic::harmonic(Complex(Q(1, 2))), Complex(half)), 64L * eps);
  EXPECT_NEAR(half.to_double(), 0.6137056389, 1e-10);
  EXPECT_THROW(harmonic::harmonic(Complex(-1L)), PoleError);
  EXPECT_THROW(harmonic::harmonic(Complex(-4L)), PoleError);
}

TEST_F(Harmonic, GenHarmonicExamples) {
  EXPECT_LE(rel_error(gen_harmonic(2, Complex(3L)), Complex(Q(49, 36))), 16L * eps);
  EXPECT_LE(abs(gen_harmonic(2, Complex(0L))), 8L * eps);
  const Real want = -6L * k.zeta3;
  EXPECT_LE(rel_error(gen_harmonic(3, Complex(Q(-1, 2))), Complex(want)), 16L * eps);
  EXPECT_NEAR(want.to_double(), -7.2123414189, 1e-10);
  EXPECT_EQ(gen_harmonic(1, Complex(Q(5, 2))), harmonic::harmonic(Complex(Q(5, 2))));
  EXPECT_THROW(gen_harmonic(0, Complex(1L)), DomainError);
  EXPECT_THROW(gen_harmonic(2, Complex(-2L)), PoleError);
}

TEST_F(Harmonic, GenHarmonicMatchesExactSumsAtDoublePrecision) {
  PrecisionScope p53(53);
  for (long m = 1; m <= 4; ++m) {
    for (long n = 0; n <= 200; ++n) {
      Real want(exact_gen_harmonic(m, n));
      Complex got = gen_harmonic(m, Complex(n));
      if (n == 0) {
        EXPECT_LE(abs(got), Real(1e-13)) << m;
      } else {
        ASSERT_LE(rel_error(got, Complex(want)), Real(1e-13)) << "m=" << m << " n=" << n;
      }
    }
  }
}

TEST_F(Harmonic, OddHarmonicExamples) {
  EXPECT_EQ(odd_harmonic(1, 3), R(23, 15));
  EXPECT_EQ(odd_harmonic(2, 2), R(10, 9));
  EXPECT_EQ(odd_harmonic(1, 0), 0);
  // O_n = H_{2n} - H_n / 2
  for (long n = 0; n <= 40; ++n) {
    EXPECT_EQ(odd_harmonic(1, n), exact_gen_harmonic(1, 2 * n) - exact_gen_harmonic(1, n) / 2);
  }
}

TEST_F(Harmonic, ExactGenHarmonicExamples) {
  EXPECT_EQ(exact_gen_harmonic(1, 4), R(25, 12));
  EXPECT_EQ(exact_gen_harmonic(2, 2), R(5, 4));
  EXPECT_EQ(exact_gen_harmonic(3, 1), 1);
  EXPECT_EQ(exact_gen_harmonic(5, 0), 0);
}

TEST_F(Harmonic, HalfIntegerHarmonicExamples) {
  const Real want = 4L - 2L * k.zeta2;
  EXPECT_LE(rel_error(half_integer_harmonic(2, 1), Complex(want)), 16L * eps);
  EXPECT_NEAR(want.to_double(), 0.7101318663, 1e-10);
  EXPECT_LE(rel_error(half_integer_harmonic(1, 0), Complex(-2L * k.ln2)), 4L * eps);
  EXPECT_NEAR((-2L * k.ln2).to_double(), -1.3862943611, 1e-10);
  EXPECT_LE(rel_error(half_integer_harmonic(4, 0), Complex(-14L * k.zeta4)), 4L * eps);
  // -14 zeta(4) = -15.15252527196
  EXPECT_NEAR((-14L * k.zeta4).to_double(), -15.1525252720, 1e-10);
  EXPECT_THROW(half_integer_harmonic(5, 0), DomainError);
  EXPECT_THROW(half_integer_harmonic(0, 1), DomainError);
  EXPECT_THROW(half_integer_harmonic(2, -1), DomainError);
}

TEST_F(Harmonic, HalfIntegerClosureAgainstPolygamma) {
  // |half_integer_harmonic(m,k) - gen_harmonic(m, k-1/2)| < 10 tol with tol
  // the context tolerance; a 64 ulp bound keeps the check meaningful.
  const Real tol(PrecisionContext{}.target_tol);
  for (long m = 1; m <= 4; ++m) {
    for (long kk = 0; kk <= 100; ++kk) {
      Complex a = half_integer_harmonic(m, kk);
      Complex b = gen_harmonic(m, Complex(Real(kk) - Q(1, 2)));
      Real scale = max(Real(1L), abs(b));
      ASSERT_LT(abs(a - b), 10L * tol);
      ASSERT_LT(abs(a - b), 64L * eps * scale) << "m=" << m << " k=" << kk;
    }
  }
}

TEST_F(Harmonic, ConstantFormsEvaluateAndMatchRelations) {
  for (long m = 1; m <= 4; ++m) {
    for (long kk = 0; kk <= 12; ++kk) {
      ConstantForm f = half_integer_harmonic_form(m, kk);
      EXPECT_LE(rel_error(Complex(f.evaluate()), half_integer_harmonic(m, kk)), 64L * eps);
      // Relation: H_{k-1/2}^(m) - H_{-1/2}^(m) = 2^m O_k^(m), all m.
      ConstantForm base = half_integer_harmonic_form(m, 0);
      for (int i = 1; i < 5; ++i) EXPECT_EQ(f.coeff[i], base.coeff[i]);
      EXPECT_EQ(f.coeff[0] - base.coeff[0], pow2(m) * odd_harmonic(m, kk));
    }
  }
  EXPECT_EQ(half_integer_harmonic_form(1, 0).coeff[1], -2);
  EXPECT_EQ(half_integer_harmonic_form(2, 0).coeff[2], -2);
  EXPECT_EQ(half_integer_harmonic_form(3, 0).coeff[3], -6);
  EXPECT_EQ(half_integer_harmonic_form(4, 0).coeff[4], -14);
  EXPECT_STREQ(ConstantForm::basis_names()[3], "zeta3");
}

TEST_F(Harmonic, FiniteBinomSumExamples) {
  EXPECT_EQ(finite_binom_sum(3, R(2)), R(3, 5));
  EXPECT_EQ(finite_binom_sum_closed(3, R(2)), R(3, 5));
  EXPECT_EQ(finite_binom_sum(1, R(3)), R(1, 4));
  EXPECT_EQ(finite_binom_sum_closed(1, R(3)), R(1, 4));
  EXPECT_EQ(finite_binom_sum(2, R(1, 2)), finite_binom_sum_closed(2, R(1, 2)));
  EXPECT_THROW(finite_binom_sum(3, R(0)), DomainError);
  EXPECT_THROW(finite_binom_sum(3, R(1)), DomainError);
  EXPECT_THROW(finite_binom_sum_closed(3, R(1)), DomainError);
  EXPECT_THROW(finite_binom_sum(0, R(2)), DomainError);
}

TEST_F(Harmonic, FiniteBinomSumExactGrid) {
  for (long m = 1; m <= 20; ++m) {
    for (long p = -9; p <= 9; ++p) {
      for (long q = 1; q <= 6; ++q) {
        BigRational n = R(p, q);
        if (n == 0 || n == 1) continue;
        BigRational lhs, rhs;
        try {
          lhs = finite_binom_sum(m, n);
        } catch (const DomainError&) {
          continue;  // a vanishing binomial in the sum
        }
        rhs = finite_binom_sum_closed(m, n);
        ASSERT_EQ(lhs, rhs) << "m=" << m << " n=" << to_string(n);
      }
    }
  }
}

TEST_F(Harmonic, FiniteBinomSumComplex) {
  Complex n(Real(0.3), Real(0.7));
  EXPECT_LE(rel_error(finite_binom_sum(7, n), finite_binom_sum_closed(7, n)), Real(1e-35));
}

TEST_F(Harmonic, FrischExamples) {
  EXPECT_EQ(frisch_sum(2, R(1)), R(1, 3));
  EXPECT_EQ(frisch_closed(2, R(1)), R(1, 3));
  for (const BigRational& z : {R(1), R(1, 2), R(-7, 3), R(5, 6)}) EXPECT_EQ(frisch_sum(1, z), 1 / (z + 1));
  // 1/C(11/2, 5) in exact rationals vs the Gamma-based closed form.
  Complex numeric = frisch_closed(5, Complex(Q(1, 2)));
  Real exact(frisch_sum(5, R(1, 2)));
  EXPECT_LE(rel_error(numeric, Complex(exact)), Real(1e-14));
  EXPECT_THROW(frisch_sum(3, R(-2)), PoleError);
  EXPECT_THROW(frisch_sum(3, Complex(-3L)), PoleError);
}

TEST_F(Harmonic, FrischExactGrid) {
  for (long n = 1; n <= 12; ++n) {
    for (long p = 1; p <= 6; ++p) {
      for (long q = 1; q <= 6; ++q) {
        BigRational z = R(p, q);
        ASSERT_EQ(frisch_sum(n, z), frisch_closed(n, z)) << n << " " << to_string(z);
      }
    }
  }
}

TEST_F(Harmonic, FrischComplex) {
  Complex z(Real(0.3), Real(0.7));
  // The alternating sum cancels about log10 C(n, n/2) digits.
  for (long n : {1L, 4L, 12L, 30L}) {
    EXPECT_LE(rel_error(frisch_sum(n, z), frisch_closed(n, z)), Real(1e-25)) << n;
  }
}

TEST_F(Harmonic, WeightedH2Examples) {
  EXPECT_EQ(weighted_h2_sum(0, 2), R(9, 4));
  EXPECT_EQ(weighted_h2_sum(1, 2), R(7, 2));
  EXPECT_EQ(weighted_h2_sum(2, 2), 6);
  EXPECT_EQ(weighted_h2_closed(2, 2), 6);
}

TEST_F(Harmonic, WeightedH2ClosedFormsUpTo100) {
  for (int j = 0; j <= 2; ++j) {
    for (long r = 1; r <= 100; ++r) ASSERT_EQ(weighted_h2_sum(j, r), weighted_h2_closed(j, r)) << j << " " << r;
  }
}

TEST_F(Harmonic, HalfIntegerBinomExamples) {
  auto f = half_integer_binom(BinomCase::F, 2, 0);
  EXPECT_LE(rel_error(f.lhs, Complex(Q(15, 8))), 8L * eps);
  EXPECT_LE(rel_error(f.rhs, Complex(Q(15, 8))), 8L * eps);
  auto b = half_integer_binom(BinomCase::B, 1, 0);
  const Real four_over_pi = 4L / k.pi;
  EXPECT_LE(rel_error(b.lhs, Complex(four_over_pi)), Real(1e-35));
  EXPECT_LE(rel_error(b.rhs, Complex(four_over_pi)), 8L * eps);
  EXPECT_NEAR(four_over_pi.to_double(), 1.2732395447, 1e-10);
  auto d = half_integer_binom(BinomCase::D, 2, 1);
  EXPECT_LE(rel_error(d.lhs, Complex(Q(5, 2))), 8L * eps);
  EXPECT_LE(rel_error(d.rhs, Complex(Q(5, 2))), 8L * eps);
}

TEST_F(Harmonic, HalfIntegerBinomExactForAllSmallArguments) {
  int checked = 0;
  for (BinomCase c : {BinomCase::A, BinomCase::B, BinomCase::C, BinomCase::D, BinomCase::E, BinomCase::F}) {
    for (long u = 0; u <= 10; ++u) {
      for (long v = 0; v <= 10; ++v) {
        ExactBinomPair e;
        try {
          e = half_integer_binom_exact(c, u, v);
        } catch (const DomainError&) {
          continue;
        }
        ++checked;
        ASSERT_EQ(e.lhs, e.rhs) << to_char(c) << " u=" << u << " v=" << v;
        auto num = half_integer_binom(c, u, v);
        ASSERT_LE(rel_error(num.lhs, num.rhs), Real(c == BinomCase::B ? 1e-13 : 1e-30)) << to_char(c);
        if (c == BinomCase::B || c == BinomCase::F) break;
      }
    }
  }
  EXPECT_GT(checked, 200);
}

TEST_F(Harmonic, CaseCCarriesAFactorOfOneOverPi) {
  // u=0, v=1: C(0, -1/2) = 1/(Gamma(1/2) Gamma(3/2)) = 2/pi, while the bare
  // rational expression gives 2.
  auto e = half_integer_binom_exact(BinomCase::C, 0, 1);
  EXPECT_EQ(e.pi_power, -1);
  EXPECT_EQ(e.lhs, 2);
  auto n = half_integer_binom(BinomCase::C, 0, 1);
  EXPECT_LE(rel_error(n.lhs, Complex(2L / k.pi)), Real(1e-35));
  EXPECT_GT(abs(n.lhs - Complex(2L)).to_double(), 1.0);
}

TEST_F(Harmonic, HalfIntegerBinomDomainsAndParsing) {
  EXPECT_THROW(half_integer_binom(BinomCase::A, 1, 2), DomainError);
  EXPECT_THROW(half_integer_binom(BinomCase::C, 1, 0), DomainError);
  EXPECT_THROW(half_integer_binom(BinomCase::E, 2, 2), DomainError);
  EXPECT_THROW(half_integer_binom(BinomCase::F, -1, 0), DomainError);
  EXPECT_EQ(parse_binom_case("e"), BinomCase::E);
  EXPECT_EQ(to_char(BinomCase::D), 'D');
  EXPECT_THROW(parse_binom_case("G"), ParseError);
}

TEST_F(Harmonic, GenBinomAgreesWithCaseAOnRealGrid) {
  // Duplication-formula consistency of the Gamma path for u, v in [0, 8].
  for (long u = 0; u <= 8; ++u) {
    for (long v = 0; v <= u; ++v) {
      Complex g = specfun::gen_binom(Complex(Real(u) - Q(1, 2)), Complex(v));
      Real want(BigRational(BigRational(binomial(2 * u, u) * binomial(u, v)) * pow2(-2 * v) /
                            BigRational(binomial(2 * (u - v), u - v))));
      EXPECT_LE(rel_error(g, Complex(want)), Real(1e-35)) << u << " " << v;
    }
  }
}

}  // namespace
