#include <gtest/gtest.h>

#include "freud/numerics.hpp"
#include "freud/random.hpp"

using namespace freud;

namespace {

Scalar q(long n, long d = 1) { return Scalar::frac(n, d); }

Matrix diag(std::initializer_list<Scalar> xs) {
  Matrix m(xs.size(), xs.size());
  std::size_t i = 0;
  for (const auto& x : xs) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST(Scalar, ExactRoundTrip) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Scalar a = rng.rational(1000, 97), b = rng.rational(1000, 97);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_exact_zero()) EXPECT_EQ((a * b) / b, a);
    EXPECT_TRUE(((a + b) - b).is_exact());
  }
}

TEST(Scalar, SerializationRoundTrip) {
  EXPECT_EQ(q(-3, 6).str(), "-1/2");
  EXPECT_EQ(Scalar::parse("4/8"), q(1, 2));
  EXPECT_EQ(Scalar::parse("7"), q(7));
  EXPECT_EQ(Scalar::parse("-1.25"), q(-5, 4));
  Scalar r = sqrt(q(2));
  ASSERT_FALSE(r.is_exact());
  EXPECT_EQ(r.str().substr(0, 10), "~1.4142135");
  Scalar back = Scalar::parse(r.str());
  EXPECT_TRUE(approx_equal(back, r));
  EXPECT_EQ(back.bits(), 256);
  EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
}

TEST(Scalar, RadicalsStayExactOnPerfectPowers) {
  EXPECT_EQ(sqrt(q(9, 4)), q(3, 2));
  EXPECT_EQ(cbrt(q(-27, 8)), q(-3, 2));
  EXPECT_EQ(root4(q(16, 81)), q(2, 3));
  EXPECT_FALSE(cbrt(q(2)).is_exact());
  Scalar c = cbrt(q(-2));
  EXPECT_LT(c, q(0));
  EXPECT_TRUE(approx_equal(c * c * c, q(-2)));
  EXPECT_THROW(sqrt(q(-1)), std::domain_error);
}

TEST(Scalar, ToleranceZeroTest) {
  Precision p;
  Scalar tiny = Scalar(BigFloat(Rational(1, 1), p.bits, p.tol_log2)) * pow(q(1, 2), 200);
  EXPECT_TRUE(tiny.is_zero());
  Scalar small = Scalar(BigFloat(Rational(1, 1), p.bits, p.tol_log2)) * pow(q(1, 2), 100);
  EXPECT_FALSE(small.is_zero());
  EXPECT_FALSE(q(1, 1000000).is_zero());
}

TEST(Cubic, DoubleRootExample) {
  auto r = real_roots_cubic(q(1), q(0), q(-3), q(2));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].value, q(-2));
  EXPECT_EQ(r[0].multiplicity, 1);
  EXPECT_EQ(r[1].value, q(1));
  EXPECT_EQ(r[1].multiplicity, 2);
}

TEST(Cubic, TripleRootAtOrigin) {
  auto r = real_roots_cubic(q(1), q(0), q(0), q(0));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].value, q(0));
  EXPECT_EQ(r[0].multiplicity, 3);
}

TEST(Cubic, IrrationalSingleRootMatchesBisectionOracle) {
  auto r = real_roots_cubic(q(1), q(0), q(3), q(1));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r[0].value.is_exact());
  // Frozen from a 250-step bisection at 60 digits.
  Scalar oracle = Scalar::parse("-0.322185354626085592911470710704031984931644382899584");
  EXPECT_TRUE((r[0].value - oracle).abs() < pow(q(1, 10), 48));
}

TEST(Cubic, RationalRootsRecoveredExactly) {
  // (3x - 2)(x + 5)(7x - 1)
  auto r = real_roots_cubic(q(21), q(88), q(-83), q(10));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].value, q(-5));
  EXPECT_EQ(r[1].value, q(1, 7));
  EXPECT_EQ(r[2].value, q(2, 3));
  // One rational root with an irrational pair: (2x - 1)(x^2 - 2)
  auto s = real_roots_cubic(q(2), q(-1), q(-4), q(2));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_FALSE(s[0].value.is_exact());
  EXPECT_EQ(s[1].value, q(1, 2));
  EXPECT_TRUE(approx_equal(s[2].value * s[2].value, q(2)));
}

TEST(Cubic, RootsSatisfyPolynomial) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Scalar c3 = rng.nonzero_rational(9, 4), c2 = rng.rational(9, 4), c1 = rng.rational(9, 4), c0 = rng.rational(9, 4);
    auto roots = real_roots_cubic(c3, c2, c1, c0);
    ASSERT_FALSE(roots.empty());
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) EXPECT_LT(roots[k].value, roots[k + 1].value);
    for (const auto& r : roots) {
      Scalar f = poly_eval({c0, c1, c2, c3}, r.value);
      if (r.value.is_exact()) {
        EXPECT_TRUE(f.is_exact_zero());
      } else {
        EXPECT_TRUE(f.is_zero(q(100)));
      }
    }
  }
}

TEST(Cubic, RejectsZeroLeadingCoefficient) {
  EXPECT_THROW(real_roots_cubic(q(0), q(1), q(1), q(1)), std::domain_error);
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(diag({q(1), q(-1)})), (Inertia{1, 1, 0}));
  Matrix hyp(2, 2);
  hyp(0, 1) = q(1);
  hyp(1, 0) = q(1);
  EXPECT_EQ(inertia(hyp), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia(diag({q(0), q(3), q(0)})), (Inertia{1, 0, 2}));
  Matrix bad(2, 2);
  bad(0, 1) = q(1);
  EXPECT_THROW(inertia(bad), std::invalid_argument);
}

TEST(Inertia, CongruenceInvariant) {
  Rng rng(5);
  for (std::size_t n = 1; n <= 12; ++n) {
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = (rng.uniform_int(0, 2) ? rng.rational() : q(0));
    Inertia base = inertia(s);
    EXPECT_EQ(base.positive + base.negative + base.zero, static_cast<int>(n));
    for (int t = 0; t < 100; ++t) {
      Matrix p(n, n);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) p(i, j) = rng.rational(3, 2);
      } while (determinant(p).is_exact_zero());
      EXPECT_EQ(inertia(p.transpose() * s * p), base);
    }
  }
}

TEST(Matrix, InverseAndDeterminant) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng.rational();
    if (determinant(m).is_exact_zero()) continue;
    EXPECT_EQ(m * inverse(m), Matrix::identity(4));
    EXPECT_EQ(determinant(m) * determinant(inverse(m)), q(1));
  }
  EXPECT_THROW(inverse(Matrix(2, 2)), std::domain_error);
}
