#include <gtest/gtest.h>

#include "freud/hypermatrix.hpp"
#include "freud/transform.hpp"

using namespace freud;

namespace {

Scalar q(long n, long d = 1) { return Scalar::frac(n, d); }

std::vector<JordanAlgebra> families() {
  std::vector<JordanAlgebra> f;
  for (auto n : {"R", "C", "Hs", "O"}) f.push_back(JordanAlgebra::magic(CompositionAlgebra::from_name(n)));
  for (int n = 2; n <= 4; ++n) f.push_back(JordanAlgebra::spin(2, n));
  f.push_back(JordanAlgebra::spin(3, 3));
  f.push_back(JordanAlgebra::spin(1, 3));
  f.push_back(JordanAlgebra::three_r());
  f.push_back(JordanAlgebra::two_r());
  f.push_back(JordanAlgebra::one_r());
  return f;
}

}  // namespace

TEST(Transform, GeneratorExamples) {
  Rng rng(1);
  for (const auto& j : families()) {
    const FtsElement x = random_fts(rng, j);
    EXPECT_EQ(apply(PhiMove{JordanElement::zero(j)}, x), x);
    EXPECT_EQ(apply(ZeeMove{}, x), (FtsElement{-x.beta, -x.B, x.A, x.alpha}));
    EXPECT_EQ(apply_word({ZeeMove{}, ZeeMove{}}, x), -x);
    EXPECT_EQ(apply_word(TransformationWord(4, ZeeMove{}), x), x);
  }
  const auto r = JordanAlgebra::one_r();
  const FtsElement y{0, JordanElement(r, {0}), JordanElement(r, {1}), 0};
  EXPECT_EQ(apply(PsiMove{JordanElement(r, {1})}, y).beta, q(3));
}

TEST(Transform, GeneratorsPreserveForms) {
  Rng rng(2);
  for (const auto& j : families()) {
    for (int t = 0; t < 6; ++t) {
      const TransformationWord w = random_word(rng, j, 1);
      const FtsElement x = random_fts(rng, j), y = random_fts(rng, j);
      const FtsElement wx = apply_word(w, x), wy = apply_word(w, y);
      EXPECT_EQ(quartic_delta(wx), quartic_delta(x)) << j.name() << " " << move_name(w[0]);
      EXPECT_EQ(symplectic(wx, wy), symplectic(x, y)) << j.name() << " " << move_name(w[0]);
    }
  }
}

TEST(Transform, ZeeFromPhiPsi) {
  for (const auto& j : families()) {
    const TransformationWord w = zee_along(JordanElement::one(j));
    for (int k = 0; k < FtsElement::flat_dim(j); ++k) {
      const FtsElement e = FtsElement::basis(j, k);
      EXPECT_EQ(apply_word(w, e), apply(ZeeMove{}, e)) << j.name();
    }
  }
}

TEST(Transform, InverseRoundTrip) {
  Rng rng(3);
  for (const auto& j : families()) {
    const TransformationWord w = random_word(rng, j, 8);
    const FtsElement x = random_fts(rng, j);
    EXPECT_EQ(apply_word(invert(w), apply_word(w, x)), x) << j.name();
    EXPECT_EQ(apply_word(compose(w, invert(w)), x), x);
    const TransformationWord single{PhiMove{rng.jordan(j)}};
    EXPECT_EQ(apply_word(invert(single), apply_word(single, x)), x);
  }
}

TEST(Transform, WordsAreAutomorphisms) {
  Rng rng(4);
  for (const auto& j : families()) {
    const TransformationWord w = random_word(rng, j, 10);
    const FtsElement x = random_fts(rng, j), y = random_fts(rng, j), z = random_fts(rng, j);
    const FtsElement wx = apply_word(w, x), wy = apply_word(w, y), wz = apply_word(w, z);
    EXPECT_EQ(quartic_delta(wx), quartic_delta(x)) << j.name();
    EXPECT_EQ(symplectic(wx, wy), symplectic(x, y));
    EXPECT_EQ(triple(wx), apply_word(w, triple(x)));
    EXPECT_EQ(wedge_apply(wx, wy, wz), apply_word(w, wedge_apply(x, y, z)));
    EXPECT_EQ(rank(wx), rank(x));
    if (j.dim() <= 6) EXPECT_EQ(aut_membership(j, word_matrix(j, w)), AutMembership::InGroup) << j.name();
  }
}

TEST(Transform, RandomWordDeterminism) {
  const auto j = JordanAlgebra::spin(2, 3);
  EXPECT_TRUE(random_word(j, 0, 7).empty());
  const TransformationWord a = random_word(j, 12, 99), b = random_word(j, 12, 99);
  Rng rng(5);
  const FtsElement x = random_fts(rng, j);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(move_name(a[i]), move_name(b[i]));
  EXPECT_EQ(apply_word(a, x), apply_word(b, x));
  EXPECT_THROW(random_word(j, -1, 1), std::invalid_argument);
}

TEST(Transform, TauValidation) {
  const auto s23 = JordanAlgebra::spin(2, 3);
  EXPECT_NO_THROW(make_tau(s23, q(2) * Matrix::identity(4), q(8)));
  EXPECT_THROW(make_tau(s23, q(2) * Matrix::identity(4), q(4)), std::invalid_argument);
  Matrix bad = Matrix::identity(4);
  bad(1, 2) = q(1);
  EXPECT_THROW(make_tau(s23, bad, q(1)), std::invalid_argument);
  Rng rng(6);
  for (const auto& j : families()) {
    for (int t = 0; t < 4; ++t) {
      const TauMove m = random_tau(rng, j);
      EXPECT_NO_THROW(make_tau(j, m.tau, m.lambda)) << j.name();
    }
    const TauMove f = str_with_factor(j, q(-8, 27));
    EXPECT_NO_THROW(make_tau(j, f.tau, f.lambda)) << j.name();
    EXPECT_EQ(f.lambda, q(-8, 27));
    const FtsElement x = random_fts(rng, j);
    EXPECT_EQ(apply(f, x).alpha, x.alpha * q(-27, 8));
  }
}

TEST(Transform, EFrame) {
  for (const auto& j : {JordanAlgebra::spin(2, 2), JordanAlgebra::spin(3, 4), JordanAlgebra::three_r(),
                        JordanAlgebra::magic(CompositionAlgebra::from_name("O"))}) {
    const auto e = e_frame(j);
    EXPECT_EQ(e[0] + e[1] + e[2], JordanElement::one(j)) << j.name();
    for (int i = 0; i < 3; ++i) {
      EXPECT_TRUE(is_irreducible_idempotent(e[i])) << j.name() << i;
      EXPECT_EQ(cross(e[(i + 1) % 3], e[(i + 2) % 3]), e[i]);
    }
  }
  EXPECT_THROW(e_frame(JordanAlgebra::two_r()), std::invalid_argument);
  EXPECT_THROW(e_frame(JordanAlgebra::spin(1, 4)), std::invalid_argument);
}

TEST(Transform, EFrameScaling) {
  for (const auto& j : {JordanAlgebra::spin(2, 2), JordanAlgebra::spin(2, 5), JordanAlgebra::spin(4, 3),
                        JordanAlgebra::three_r()}) {
    const TauMove m = e_frame_scaling(j, q(3), q(2), q(8));
    EXPECT_NO_THROW(make_tau(j, m.tau, m.lambda)) << j.name();
    const auto e = e_frame(j);
    EXPECT_EQ(apply(m.tau, e[0]), q(3) * e[0]);
    EXPECT_EQ(apply(m.tau, e[1]), q(2) * e[1]);
    EXPECT_EQ(apply(m.tau, e[2]), q(8) * e[2]);
  }
  EXPECT_THROW(e_frame_scaling(JordanAlgebra::spin(2, 3), 1, -1, 1), std::invalid_argument);
}

TEST(Transform, MagicCongruence) {
  const auto j = JordanAlgebra::magic(CompositionAlgebra::from_name("H"));
  Matrix p = Matrix::identity(3);
  p(0, 1) = q(2);
  p(2, 0) = q(-1, 3);
  p(1, 1) = q(3);
  const TauMove m = magic_congruence(j, p);
  EXPECT_EQ(m.lambda, q(9));
  EXPECT_NO_THROW(make_tau(j, m.tau, m.lambda));
  // P diag(1,0,0) P^t is the outer product of the first column.
  const JordanElement img = apply(m.tau, JordanElement::diag(j, 1, 0, 0));
  EXPECT_EQ(img[0], q(1));
  EXPECT_EQ(img[2], q(1, 9));
}

TEST(Transform, Sl2DictionaryForOneR) {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Scalar a = t % 4 == 0 ? Scalar(0) : rng.nonzero_rational(3, 2);
    Scalar b = rng.rational(3, 2), c = rng.nonzero_rational(3, 2), d;
    if (a.is_exact_zero()) {
      b = Scalar(-1) / c;
      d = rng.rational(3, 2);
    } else {
      d = (Scalar(1) + b * c) / a;
    }
    const FtsElement x = random_fts(rng, JordanAlgebra::one_r());
    const Mat2 m{{{a, b}, {c, d}}};
    const FtsElement lhs = apply_word(sl2_word(a, b, c, d), x);
    const FtsElement rhs = from_sym_hypermatrix(act_sym(m, to_sym_hypermatrix(x)));
    EXPECT_EQ(lhs, rhs) << t;
  }
  EXPECT_THROW(sl2_word(1, 1, 1, 1), std::invalid_argument);
}

TEST(Transform, ThreeRDictionary) {
  // phi(C) acts as the tensor product of the upper unitriangular matrices with entries C_i.
  Rng rng(8);
  const auto r3 = JordanAlgebra::three_r();
  for (int t = 0; t < 10; ++t) {
    const FtsElement x = random_fts(rng, r3);
    const JordanElement c = rng.jordan(r3);
    auto up = [&](int i) { return Mat2{{{1, c[i]}, {0, 1}}}; };
    auto lo = [&](int i) { return Mat2{{{1, 0}, {c[i], 1}}}; };
    EXPECT_EQ(to_hypermatrix(apply(PhiMove{c}, x)), act(up(0), up(1), up(2), to_hypermatrix(x)));
    EXPECT_EQ(to_hypermatrix(apply(PsiMove{c}, x)), act(lo(0), lo(1), lo(2), to_hypermatrix(x)));
    const Mat2 s{{{0, -1}, {1, 0}}};
    EXPECT_EQ(to_hypermatrix(apply(ZeeMove{}, x)), act(s, s, s, to_hypermatrix(x)));
  }
}
