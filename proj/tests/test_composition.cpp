#include <gtest/gtest.h>

#include "freud/composition.hpp"
#include "freud/random.hpp"
#include "oracles.hpp"

using namespace freud;

namespace {

const std::vector<CompositionAlgebra> kAll = {{1, false}, {2, false}, {4, false}, {8, false},
                                              {2, true},  {4, true},  {8, true}};

CompositionElement random_elem(Rng& rng, const CompositionAlgebra& a) {
  return {a, rng.rational_vec(a.dim)};
}

}  // namespace

TEST(Composition, TableMatchesRecursiveOracle) {
  for (const auto& a : kAll) {
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) {
        oracle::QVec x(a.dim), y(a.dim);
        x[i] = 1;
        y[j] = 1;
        oracle::QVec r = oracle::cd_mul(x, y, a.split);
        BasisProduct p = basis_product(a, i, j);
        for (int k = 0; k < a.dim; ++k) EXPECT_EQ(r[k], k == p.index ? p.sign : 0) << a.name() << i << j;
      }
  }
}

TEST(Composition, Examples) {
  CompositionAlgebra o{8, false}, os{8, true};
  auto e = [](CompositionAlgebra a, int k) { return CompositionElement::unit(a, k); };
  EXPECT_EQ(e(o, 1) * e(o, 2), e(o, 3));
  EXPECT_EQ(e(os, 4) * e(os, 4), e(os, 0));
  EXPECT_EQ(e(o, 1).conj(), Scalar(-1) * e(o, 1));
  EXPECT_EQ((e(o, 0) + e(o, 1)).quad_norm(), Scalar(2));
  EXPECT_EQ(e(os, 4).quad_norm(), Scalar(-1));
  Rng rng(2);
  for (const auto& a : kAll) {
    CompositionElement x = random_elem(rng, a);
    EXPECT_EQ(e(a, 0) * x, x);
    EXPECT_EQ(x * e(a, 0), x);
  }
  EXPECT_THROW(e(o, 1) * e(os, 1), std::invalid_argument);
  EXPECT_THROW((CompositionAlgebra{1, true}).validate(), std::invalid_argument);
}

TEST(Composition, CompositionLawAndAlternativity) {
  Rng rng(7);
  for (const auto& a : kAll) {
    for (int t = 0; t < 1000; ++t) {
      CompositionElement x = random_elem(rng, a), y = random_elem(rng, a);
      ASSERT_EQ((x * y).quad_norm(), x.quad_norm() * y.quad_norm()) << a.name();
      ASSERT_EQ(x * (x * y), (x * x) * y) << a.name();
      ASSERT_EQ((y * x) * x, y * (x * x)) << a.name();
      ASSERT_EQ((x * y).conj(), y.conj() * x.conj()) << a.name();
      ASSERT_EQ((x * x.conj()).re(), x.quad_norm());
    }
  }
}

TEST(Composition, AssociativityOnlyBelowDimensionEight) {
  Rng rng(9);
  for (const auto& a : kAll) {
    bool assoc = true;
    for (int i = 0; i < a.dim && assoc; ++i)
      for (int j = 0; j < a.dim && assoc; ++j)
        for (int k = 0; k < a.dim && assoc; ++k) {
          auto x = CompositionElement::unit(a, i), y = CompositionElement::unit(a, j), z = CompositionElement::unit(a, k);
          if (!((x * y) * z == x * (y * z))) assoc = false;
        }
    EXPECT_EQ(assoc, a.dim < 8) << a.name();
  }
  // Concrete octonion witness: (e1 e2) e4 = -e1 (e2 e4).
  CompositionAlgebra o{8, false};
  auto e = [&](int k) { return CompositionElement::unit(o, k); };
  EXPECT_EQ((e(1) * e(2)) * e(4), Scalar(-1) * (e(1) * (e(2) * e(4))));
}

TEST(Composition, SplitSignature) {
  for (const auto& a : kAll) {
    int pos = 0, neg = 0;
    for (int k = 0; k < a.dim; ++k) (CompositionElement::unit(a, k).quad_norm() > Scalar(0) ? pos : neg)++;
    if (a.split) {
      EXPECT_EQ(pos, neg) << a.name();
    } else {
      EXPECT_EQ(neg, 0) << a.name();
    }
  }
}
