#include <gtest/gtest.h>

#include "freud/hypermatrix.hpp"
#include "freud/random.hpp"
#include "oracles.hpp"

using namespace freud;

namespace {

Scalar q(long n, long d = 1) { return Scalar::frac(n, d); }

Hypermatrix222 random_cube(Rng& rng) {
  Hypermatrix222 h;
  for (auto& e : h.a) e = rng.rational(4, 3);
  return h;
}

Mat2 random_sl2(Rng& rng) {
  const Scalar a = rng.nonzero_rational(3, 2), b = rng.rational(3, 2), c = rng.rational(3, 2);
  return Mat2{{{a, b}, {c, (Scalar(1) + b * c) / a}}};
}

}  // namespace

TEST(Hypermatrix, CorrespondenceExamples) {
  const auto r3 = JordanAlgebra::three_r();
  const auto z = JordanElement::zero(r3);
  const Hypermatrix222 h = to_hypermatrix({1, z, z, 1});
  for (int k = 0; k < 8; ++k) EXPECT_EQ(h.a[k], (k == 0 || k == 7) ? q(1) : q(0));
  const Hypermatrix222 g = to_hypermatrix({0, JordanElement(r3, {1, 0, 0}), z, 0});
  for (int k = 0; k < 8; ++k) EXPECT_EQ(g.a[k], k == 3 ? q(1) : q(0));
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const FtsElement x = random_fts(rng, r3);
    EXPECT_EQ(from_hypermatrix(to_hypermatrix(x)), x);
  }
  EXPECT_THROW(to_hypermatrix(FtsElement::zero(JordanAlgebra::two_r())), std::invalid_argument);
}

TEST(Hypermatrix, HyperdetExamples) {
  Hypermatrix222 h;
  h(0, 0, 0) = h(1, 1, 1) = q(1);
  EXPECT_EQ(hyperdet(h), q(1));
  Hypermatrix222 g;
  g(0, 0, 0) = q(5);
  EXPECT_EQ(hyperdet(g), q(0));
}

TEST(Hypermatrix, HyperdetMatchesOracleAndDelta) {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const Hypermatrix222 h = random_cube(rng);
    std::array<std::array<std::array<oracle::Q, 2>, 2>, 2> a;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) a[i][j][k] = h(i, j, k).rational();
    EXPECT_EQ(hyperdet(h).rational(), oracle::cayley_det(a));
    EXPECT_EQ(hyperdet(h), -quartic_delta(from_hypermatrix(h)));
  }
}

TEST(Hypermatrix, Invariance) {
  Rng rng(3);
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int t = 0; t < 50; ++t) {
    const Hypermatrix222 h = random_cube(rng);
    const Scalar d = hyperdet(h);
    EXPECT_EQ(hyperdet(act(random_sl2(rng), random_sl2(rng), random_sl2(rng), h)), d);
    for (const auto& p : perms) EXPECT_EQ(hyperdet(permute(h, p)), d);
  }
  const Mat2 id{{{1, 0}, {0, 1}}};
  Rng r2(4);
  const Hypermatrix222 h = random_cube(r2);
  EXPECT_EQ(act(id, id, id, h), h);
  const Mat2 s{{{0, 1}, {-1, 0}}};
  const Hypermatrix222 sh = act(s, id, id, h);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      EXPECT_EQ(sh(0, j, k), h(1, j, k));
      EXPECT_EQ(sh(1, j, k), -h(0, j, k));
    }
  }
  const Mat2 bad{{{2, 0}, {0, 1}}};
  EXPECT_THROW(act(bad, id, id, h), std::invalid_argument);
}

TEST(Hypermatrix, Symmetrization) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const FtsElement x2 = random_fts(rng, JordanAlgebra::two_r());
    const SymHypermatrix p = to_sym_hypermatrix(x2);
    EXPECT_EQ(symmetrize(embed(p), SymMode::Partial), p);
    EXPECT_EQ(from_sym_hypermatrix(p), x2);
    EXPECT_EQ(hyperdet(embed(p)), -quartic_delta(x2));
    const FtsElement x1 = random_fts(rng, JordanAlgebra::one_r());
    const SymHypermatrix s = to_sym_hypermatrix(x1);
    EXPECT_EQ(symmetrize(embed(s), SymMode::Total), s);
    EXPECT_EQ(from_sym_hypermatrix(s), x1);
    EXPECT_EQ(hyperdet(embed(s)), -quartic_delta(x1));
    const Mat2 m = random_sl2(rng), n = random_sl2(rng);
    EXPECT_EQ(hyperdet(embed(act_sym(m, s))), hyperdet(embed(s)));
    EXPECT_EQ(hyperdet(embed(act_sym(m, n, p))), hyperdet(embed(p)));
    // The symmetrized action agrees with the full action on the embedded cube.
    EXPECT_EQ(embed(act_sym(m, s)), act(m, m, m, embed(s)));
    EXPECT_EQ(embed(act_sym(m, n, p)), act(m, n, n, embed(p)));
  }
}

TEST(Hypermatrix, TotallySymmetricExample) {
  const auto r = JordanAlgebra::one_r();
  const FtsElement x{1, JordanElement(r, {-1}), JordanElement(r, {0}), 1};
  const SymHypermatrix s = to_sym_hypermatrix(x);
  EXPECT_EQ(s.entries, (Vec{q(1), q(0), q(-1), q(1)}));
  // Rank-3 element with |A| = 1 and beta = 2 goes to the (0, 3, 0, 0) pattern.
  const FtsElement y{1, JordanElement(r, {-1}), JordanElement(r, {0}), 2};
  const Mat2 m{{{q(1, 3), q(1, 3)}, {q(-2), q(1)}}};
  const SymHypermatrix out = act_sym(m, to_sym_hypermatrix(y));
  EXPECT_EQ(out.entries, (Vec{q(0), q(0), q(3), q(0)}));
}
