#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "serreku/exactalg.hpp"
#include "serreku/rational.hpp"

using namespace serreku;

TEST(Rational, LowestTermsAndSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-49/100"), Rational(-49, 100));
  EXPECT_EQ(Rational::parse("+3"), Rational(3));
  EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("010/08"), Rational(5, 4));  // decimal, not octal
  EXPECT_EQ(Rational::parse(" 2 / 6 "), Rational(1, 3));
  for (const char* bad : {"", "1/", "/2", "a", "1.2.3", "1/0", "--1", "1e3"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, DivisionByZero) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(Rational(0).inverse(), Error);
}

TEST(Rational, FloorAndPow) {
  EXPECT_EQ(Rational(-1, 2).floor(), -1);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-3).floor(), -3);
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Rational, FieldAxiomsRandom) {
  oracle::Sampler smp(11);
  for (int i = 0; i < 200; ++i) {
    Rational a = oracle::R(smp.between(-5, 5)), b = oracle::R(smp.between(-5, 5)),
             c = oracle::R(smp.between(-5, 5));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(GaussRational, ConjugateProduct) {
  GaussRational z{Rational(3, 2), Rational(-2)};
  GaussRational p = z * z.conj();
  EXPECT_EQ(p.re, Rational(25, 4));
  EXPECT_EQ(p.im, Rational(0));
  EXPECT_EQ(z.norm(), Rational(25, 4));
  GaussRational w{Rational(1), Rational(1)};
  GaussRational q = z / w;
  EXPECT_EQ(q * w, z);
}

TEST(Mat2, Det) {
  EXPECT_EQ(det2(Mat2::identity()), Rational(1));
  EXPECT_EQ(det2(Mat2(0, -1, 1, 0)), Rational(1));
  // Z_{s,q} on (b1, b2) at (-1/2, 1/20)
  Rational s(-1, 2), q(1, 20);
  Mat2 z(Rational(10) * (q + Rational(3, 10)), 6, Rational(-10) * s, 10);
  EXPECT_EQ(det2(z), Rational(5));
  EXPECT_EQ(det2(z), Rational(100) * (q + Rational(3, 5) * s + Rational(3, 10)));
}

TEST(Mat2, DetMultiplicativeRandom) {
  oracle::Sampler smp(12);
  auto r = [&] { return oracle::R(smp.between(-3, 3, 50)); };
  for (int i = 0; i < 200; ++i) {
    Mat2 a(r(), r(), r(), r()), b(r(), r(), r(), r());
    EXPECT_EQ(det2(a * b), det2(a) * det2(b));
    if (!det2(a).is_zero()) EXPECT_EQ(a * a.inverse(), Mat2::identity());
  }
}

TEST(Mat2, Solve2x2) {
  auto x = solve2x2(Mat2::identity(), {3, 7});
  EXPECT_EQ(x.first, Rational(3));
  EXPECT_EQ(x.second, Rational(7));
  x = solve2x2(Mat2(2, 0, 0, 4), {1, 1});
  EXPECT_EQ(x.first, Rational(1, 2));
  EXPECT_EQ(x.second, Rational(1, 4));
  try {
    solve2x2(Mat2(1, 2, 2, 4), {1, 1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Mat2, FirstBlockOfLinearSystemAgreesWithElimination) {
  // (eps, alpha, eps', alpha') = (1/100, 1/200, 1/100, 1/200)
  oracle::FourEquationSystem sys{oracle::q(1, 100), oracle::q(1, 40000), oracle::q(1, 100), oracle::q(1, 40000)};
  auto full = sys.solve();
  auto a = sys.matrix();
  auto b = sys.rhs();
  Mat2 m(oracle::R(a[0][0]), oracle::R(a[0][1]), oracle::R(a[2][0]), oracle::R(a[2][1]));
  auto x = solve2x2(m, {oracle::R(b[0]), oracle::R(b[2])});
  EXPECT_EQ(x.first, oracle::R(full[0]));
  EXPECT_EQ(x.second, oracle::R(full[1]));
}

TEST(QuadraticSurd, Normalization) {
  QuadraticSurd x(Rational(1), Rational(1), 12);  // 1 + 2 sqrt(3)
  EXPECT_EQ(x.radicand(), 3);
  EXPECT_EQ(x.surd_coeff(), Rational(2));
  QuadraticSurd y(Rational(1), Rational(1, 2), 16);  // 1 + 2 = 3
  EXPECT_TRUE(y.is_rational());
  EXPECT_EQ(y.rational_part(), Rational(3));
  EXPECT_EQ(QuadraticSurd::sqrt_of(Rational(9, 4)), QuadraticSurd(Rational(3, 2)));
  QuadraticSurd z = QuadraticSurd::sqrt_of(Rational(3, 20));  // sqrt(15)/10
  EXPECT_EQ(z.radicand(), 15);
  EXPECT_EQ(z.surd_coeff(), Rational(1, 10));
  EXPECT_EQ(z * z, QuadraticSurd(Rational(3, 20)));
}

TEST(QuadraticSurd, Compare) {
  QuadraticSurd r2(Rational(0), Rational(1), 2);
  EXPECT_EQ(surd_cmp(r2, QuadraticSurd(Rational(3, 2))), std::strong_ordering::less);
  EXPECT_EQ(surd_cmp(QuadraticSurd(Rational(1)), QuadraticSurd(Rational(1))), std::strong_ordering::equal);
  EXPECT_EQ(surd_cmp(QuadraticSurd(Rational(7, 5)), r2), std::strong_ordering::less);
  QuadraticSurd r3(Rational(0), Rational(1), 3);
  try {
    (void)surd_cmp(r2, r3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleRadicands);
  }
}

TEST(QuadraticSurd, CompareAgreesWithFloatsRandom) {
  oracle::Sampler smp(13);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    long D = smp.integer(2, 60);
    QuadraticSurd x(oracle::R(smp.between(-4, 4)), oracle::R(smp.between(-4, 4)), D);
    QuadraticSurd y(oracle::R(smp.between(-4, 4)), oracle::R(smp.between(-4, 4)), D);
    if (x.radicand() != 0 && y.radicand() != 0 && x.radicand() != y.radicand()) continue;
    double dx = x.to_double(), dy = y.to_double();
    if (std::fabs(dx - dy) <= 1e-6) continue;
    EXPECT_EQ(surd_cmp(x, y) < 0, dx < dy);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(QuadraticSurd, RootsOfPositiveQuadraticAreGreaterThanZero) {
  // s^2/2 - m s + c with m > 0, c > 0 and positive discriminant: Vieta says
  // both roots are positive.
  Rational m(1, 3), c(1, 50);
  Rational disc = m * m - Rational(2) * c;
  ASSERT_GT(disc, Rational(0));
  QuadraticSurd root = QuadraticSurd::sqrt_of(disc);
  QuadraticSurd lo = QuadraticSurd(m) - root, hi = QuadraticSurd(m) + root;
  EXPECT_EQ(surd_cmp(lo, QuadraticSurd(Rational(0))), std::strong_ordering::greater);
  EXPECT_EQ(surd_cmp(hi, QuadraticSurd(Rational(0))), std::strong_ordering::greater);
  EXPECT_EQ(lo + hi, QuadraticSurd(Rational(2) * m));
  EXPECT_EQ(lo * hi, QuadraticSurd(Rational(2) * c));
}

TEST(QuadraticSurd, Str) {
  EXPECT_EQ(QuadraticSurd(Rational(1, 2), Rational(3), 15).str(), "1/2+3*sqrt(15)");
  EXPECT_EQ(QuadraticSurd(Rational(0), Rational(-1), 2).str(), "-sqrt(2)");
  EXPECT_EQ(QuadraticSurd(Rational(1), Rational(-1, 2), 2).str(), "1-1/2*sqrt(2)");
}
