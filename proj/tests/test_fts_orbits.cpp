#include <gtest/gtest.h>

#include "freud/fts_orbits.hpp"
#include "freud/hypermatrix.hpp"

using namespace freud;

namespace {

Scalar q(long n, long d = 1) { return Scalar::frac(n, d); }

FtsElement reduced(const JordanAlgebra& j, const Vec& a, const Scalar& beta = 0) {
  return {1, JordanElement(j, a), JordanElement::zero(j), beta};
}

FtsElement spin_el(const JordanAlgebra& j, const Scalar& a, const Scalar& t0, const Scalar& t1) {
  Vec v(j.vec_dim());
  v[0] = t0;
  v[j.p - 1] = t1;
  return {1, JordanElement::spin(j, a, v), JordanElement::zero(j), 0};
}

std::vector<JordanAlgebra> reducible() {
  std::vector<JordanAlgebra> f;
  for (int n = 2; n <= 5; ++n) f.push_back(JordanAlgebra::spin(2, n));
  f.push_back(JordanAlgebra::spin(3, 3));
  f.push_back(JordanAlgebra::two_r());
  f.push_back(JordanAlgebra::one_r());
  return f;
}

void expect_witness(const FtsElement& x, const FtsReduction& r) {
  EXPECT_EQ(rank(r.representative), rank(x));
  const FtsElement img = apply_word(r.witness, x);
  const Vec d = (img - r.representative).flat();
  EXPECT_TRUE(max_abs(d.data(), d.size()).is_zero(x.scale() * 16)) << x << " -> " << img;
  if (img.is_exact() && r.representative.is_exact()) EXPECT_TRUE(r.residual.is_exact_zero());
}

}  // namespace

TEST(FtsOrbits, AlphaFormExamples) {
  const auto r = JordanAlgebra::one_r();
  const FtsElement x = reduced(r, {q(2)}, q(3));
  const AlphaForm same = reduce_to_alpha_form(x);
  EXPECT_EQ(same.reduced, x);
  EXPECT_TRUE(same.witness.empty());

  // (0,0,0,1) over R needs psi(1) then an irrational root of 3C^3 + 3C - 1.
  const FtsElement y{0, JordanElement(r, {0}), JordanElement(r, {0}), 1};
  const AlphaForm ay = reduce_to_alpha_form(y);
  EXPECT_TRUE(approx_equal(ay.reduced.alpha, Scalar(1)));
  EXPECT_TRUE(ay.reduced.B.is_zero());
  EXPECT_EQ(apply_word(ay.witness, y), ay.reduced);
  EXPECT_EQ(rank(ay.reduced), 1);

  const auto s = JordanAlgebra::spin(2, 3);
  const FtsElement z{0, JordanElement::zero(s), JordanElement::zero(s), 1};
  const AlphaForm az = reduce_to_alpha_form(-z);
  EXPECT_EQ(az.reduced, FtsElement::basis(s, 0));
  EXPECT_THROW(reduce_to_alpha_form(FtsElement::zero(s)), std::invalid_argument);

  Rng rng(11);
  for (const auto& j : {JordanAlgebra::spin(2, 3), JordanAlgebra::three_r(), JordanAlgebra::two_r(),
                        JordanAlgebra::one_r(), JordanAlgebra::magic(CompositionAlgebra::from_name("C"))}) {
    for (int t = 0; t < 20; ++t) {
      FtsElement x = random_fts(rng, j, 2, 2);
      if (t % 3 == 0) x.alpha = 0;
      if (t % 5 == 0) x.beta = 0;
      if (x.is_zero()) continue;
      const AlphaForm a = reduce_to_alpha_form(x);
      EXPECT_TRUE(approx_equal(a.reduced.alpha, Scalar(1))) << j.name() << " " << x;
      EXPECT_TRUE(a.reduced.B.is_zero()) << j.name();
      EXPECT_EQ(apply_word(a.witness, x), a.reduced);
      EXPECT_EQ(rank(a.reduced), rank(x));
    }
  }
}

TEST(FtsOrbits, FrameShift) {
  const auto s = JordanAlgebra::spin(2, 3);
  const auto e = e_frame(s);
  const Scalar b(5), a3(7);
  const FtsElement x{1, e[0] + e[1] + a3 * e[2], JordanElement::zero(s), b};
  for (const Scalar& c : {q(0), q(1, 2), q(-3)}) {
    const FtsElement y = rank3_shift(x, 3, c).reduced;
    EXPECT_EQ(y.alpha, q(1));
    EXPECT_TRUE(y.B.is_zero());
    EXPECT_EQ(y.beta, b - q(2) * c);
    EXPECT_EQ(y.A, e[0] + e[1] + (a3 + b * c - c * c) * e[2]);
  }
  EXPECT_TRUE(rank3_shift(x, 3, 0).reduced == x);

  // Generic axis and alpha.
  const FtsElement g{2, q(3) * e[0] + q(-1) * e[1] + q(4) * e[2], JordanElement::zero(s), q(1, 3)};
  const FtsElement h = rank3_shift(g, 1, q(1, 2)).reduced;
  const Scalar pair = q(-4), c = q(1, 2);
  EXPECT_EQ(h.beta, g.beta - q(2) * pair * c / g.alpha);
  EXPECT_EQ(h.A, (q(3) + g.beta * c - pair * c * c / g.alpha) * e[0] + q(-1) * e[1] + q(4) * e[2]);

  const auto r2 = JordanAlgebra::two_r();
  const FtsElement t{3, JordanElement(r2, {q(2), q(5)}), JordanElement::zero(r2), q(1)};
  const Scalar cc = q(2, 7);
  const FtsElement u = rank3_shift(t, 1, cc).reduced;
  EXPECT_EQ(u.beta, t.beta - q(2) * cc * q(25) / t.alpha);
  EXPECT_EQ(u.A, JordanElement(r2, {q(2) + t.beta * cc - cc * cc * q(25) / t.alpha, q(5)}));
  EXPECT_TRUE(u.B.is_zero());
  EXPECT_THROW(rank3_shift(t, 2, cc), std::invalid_argument);
  EXPECT_THROW(rank3_shift(FtsElement{0, t.A, t.B, 1}, 1, cc), std::invalid_argument);
}

TEST(FtsOrbits, SpinExamples) {
  const auto s = JordanAlgebra::spin(2, 3);
  const FtsReduction a = canonical_form_f2n(spin_el(s, 0, 1, 0));
  EXPECT_EQ(a.label.tag, "x3a");
  EXPECT_TRUE(a.residual.is_exact_zero());

  const FtsElement x4c = q(2) * spin_el(s, -1, 0, 1);
  EXPECT_EQ(quartic_delta(x4c), q(-64));
  const FtsReduction c = canonical_form_f2n(x4c);
  EXPECT_EQ(c.label.tag, "x4c");
  EXPECT_EQ(*c.label.modulus, q(2));
  EXPECT_EQ(apply_word(c.witness, x4c), x4c);

  EXPECT_THROW(canonical_form_f2n(FtsElement::zero(s)), std::invalid_argument);
  EXPECT_THROW(canonical_form_f2n(reduced(JordanAlgebra::two_r(), {1, 0})), std::invalid_argument);
  EXPECT_THROW(canonical_form(reduced(JordanAlgebra::three_r(), {1, 0, 0})), std::invalid_argument);
}

TEST(FtsOrbits, GadgetExchangesNullRankTwoClasses) {
  // A2c = (0; 1/2 (1+e), 1/2 (1-e))-type null forms reach the x3 list only through the gadget.
  for (int n = 2; n <= 5; ++n) {
    const auto s = JordanAlgebra::spin(2, n);
    for (const auto& tag : {"A2c", "A2d"}) {
      const JordanElement a = spin_representative({s, tag, std::nullopt});
      const FtsElement x{1, a, JordanElement::zero(s), 0};
      ASSERT_EQ(rank(x), 3);
      const FtsReduction r = canonical_form_f2n(x);
      EXPECT_EQ(r.label.tag, std::string(tag) == "A2c" ? "x3b" : "x3a") << n;
      expect_witness(x, r);
      const FtsElement g = apply_word(spin_gadget(s), x);
      EXPECT_EQ(rank(g), 3);
    }
  }
}

TEST(FtsOrbits, TwoRExamples) {
  const auto r2 = JordanAlgebra::two_r();
  EXPECT_EQ(canonical_form_f2r(reduced(r2, {1, 0})).label.tag, "x2a");
  EXPECT_EQ(canonical_form_f2r(reduced(r2, {0, 1})).label.tag, "x3a");
  const FtsReduction b = canonical_form_f2r(q(3) * reduced(r2, {1, 1}));
  EXPECT_EQ(b.label.tag, "x4b");
  EXPECT_EQ(*b.label.modulus, q(3));
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const FtsElement x = random_fts(rng, r2, 3, 2);
    if (x.is_zero()) continue;
    const FtsReduction r = canonical_form_f2r(x);
    const std::string& g = r.label.tag;
    EXPECT_TRUE(g != "x2c" && g != "x3b" && g != "x4c");
  }
}

TEST(FtsOrbits, OneRExamples) {
  const auto r = JordanAlgebra::one_r();
  const FtsElement x{1, JordanElement(r, {-1}), JordanElement(r, {0}), 2};
  const FtsReduction a = canonical_form_fr(x);
  EXPECT_EQ(a.label.tag, "x3");
  EXPECT_EQ(a.representative, (FtsElement{0, JordanElement(r, {1}), JordanElement(r, {0}), 0}));
  EXPECT_EQ(apply_word(a.witness, x), a.representative);
  EXPECT_TRUE(a.residual.is_exact_zero());
  // The first step is the matrix [[1/3, 1/3], [-2, 1]] sending the cube to (0, 0, 3, 0).
  const Mat2 m{{{q(1, 3), q(1, 3)}, {q(-2), q(1)}}};
  const TransformationWord w = sl2_word(q(1, 3), q(1, 3), q(-2), q(1));
  EXPECT_EQ(apply_word(w, x), from_sym_hypermatrix(act_sym(m, to_sym_hypermatrix(x))));
  EXPECT_EQ(apply_word(w, x).A[0], q(3));

  EXPECT_EQ(canonical_form_fr(reduced(r, {0})).label.tag, "x1");

  // Delta = -4 < 0: representative k(1, 1) of the x4b class.
  const FtsReduction c = canonical_form_fr(reduced(r, {1}));
  EXPECT_EQ(quartic_delta(reduced(r, {1})), q(-4));
  EXPECT_EQ(c.label.tag, "x4b");
  EXPECT_EQ(*c.label.modulus, q(1));
  const FtsReduction d = canonical_form_fr(reduced(r, {-1}));
  EXPECT_EQ(d.label.tag, "x4a");
}

TEST(FtsOrbits, OneRHasNoRankTwo) {
  const auto r = JordanAlgebra::one_r();
  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    FtsElement x = random_fts(rng, r, 3, 2);
    if (t % 2) {
      // Sample near the rank-3 locus as well: (1, A, 0, +-2|A|^{3/2}) with |A| a square.
      const Scalar s = rng.nonzero_rational(3, 2);
      x = apply_word(random_word(rng, r, 4), reduced(r, {-s * s}, Scalar(2) * s * s * s));
    }
    if (x.is_zero()) continue;
    EXPECT_NE(rank(x), 2);
    if (!triple(x).is_zero()) continue;
    for (int k = 0; k < FtsElement::flat_dim(r); ++k) {
      EXPECT_TRUE(upsilon(x, FtsElement::basis(r, k)).is_zero());
    }
  }
}

TEST(FtsOrbits, RepresentativesAndCatalog) {
  for (const auto& j : reducible()) {
    for (const auto& tag : fts_tags(j)) {
      const bool r4 = tag[1] == '4';
      const std::optional<Scalar> k = r4 ? std::optional<Scalar>(q(3)) : std::nullopt;
      const FtsOrbitLabel label{j, tag, k};
      const FtsElement x = fts_representative(label);
      EXPECT_EQ(rank(x), label.rank()) << j.name() << tag;
      if (r4) EXPECT_EQ(quartic_delta(x).abs(), q(4 * 81));
      const FtsReduction r = canonical_form(x);
      EXPECT_EQ(r.label, label) << j.name() << " " << tag;
      EXPECT_TRUE(r.residual.is_exact_zero() || r.residual.is_zero()) << j.name() << tag;
    }
  }
  for (auto n : {"R", "C", "H", "O", "Cs", "Hs", "Os"}) {
    const auto j = JordanAlgebra::magic(CompositionAlgebra::from_name(n));
    EXPECT_EQ(magic_fts_catalog(j, "x2b"), reduced(j, JordanElement::diag(j, -1, 0, 0).coeffs()));
    EXPECT_EQ(rank(magic_fts_catalog(j, "x1")), 1);
    const FtsElement x4a = magic_fts_catalog(j, "x4a", q(3));
    EXPECT_EQ(x4a, q(3) * reduced(j, JordanElement::diag(j, -1, -1, -1).coeffs()));
    EXPECT_NE(quartic_delta(x4a), q(0));
    for (const auto& tag : fts_tags(j)) {
      const std::optional<Scalar> k = tag[1] == '4' ? std::optional<Scalar>(q(1)) : std::nullopt;
      EXPECT_EQ(rank(magic_fts_catalog(j, tag, k)), tag[1] - '0') << n << tag;
    }
    EXPECT_THROW(magic_fts_catalog(j, "x2c"), std::invalid_argument);
    EXPECT_THROW(magic_fts_catalog(j, "x4a"), std::invalid_argument);
    EXPECT_THROW(magic_fts_catalog(j, "x4a", q(-1)), std::invalid_argument);
  }
  EXPECT_THROW(magic_fts_catalog(JordanAlgebra::two_r(), "x1"), std::invalid_argument);
}

TEST(FtsOrbits, RoundTripUnderRandomWords) {
  Rng rng(14);
  for (const auto& j : reducible()) {
    for (const auto& tag : fts_tags(j)) {
      const bool r4 = tag[1] == '4';
      for (const Scalar& k : {q(1), q(2)}) {
        if (!r4 && k != q(1)) continue;
        const FtsOrbitLabel label{j, tag, r4 ? std::optional<Scalar>(k) : std::nullopt};
        const FtsElement rep = fts_representative(label);
        for (int t = 0; t < 50; ++t) {
          const FtsElement x = apply_word(random_word(rng, j, 6), rep);
          const FtsReduction r = canonical_form(x);
          EXPECT_EQ(r.label.tag, tag) << j.name() << " " << x;
          EXPECT_EQ(r.label.rank(), label.rank());
          if (r4) EXPECT_TRUE(approx_equal(*r.label.modulus, k)) << j.name() << tag;
          expect_witness(x, r);
        }
      }
    }
  }
}

TEST(FtsOrbits, InertiaSeparation) {
  for (int n = 3; n <= 5; ++n) {
    const auto s = JordanAlgebra::spin(2, n);
    auto fp = [&](const std::string& t) {
      return fingerprint(fts_representative({s, t, t[1] == '4' ? std::optional<Scalar>(q(1)) : std::nullopt}));
    };
    EXPECT_NE(fp("x2a"), fp("x2b"));
    EXPECT_NE(fp("x2a"), fp("x2c"));
    EXPECT_NE(fp("x2b"), fp("x2c"));
    EXPECT_NE(fp("x3a"), fp("x3b"));
    EXPECT_NE(fp("x4a"), fp("x4b"));
    EXPECT_EQ(fp("x4a").delta_sign, 1);
    EXPECT_EQ(fp("x4c").delta_sign, -1);
  }
  // At n = 2 the rank-2 fingerprints coincide.
  const auto s22 = JordanAlgebra::spin(2, 2);
  const FtsElement a = spin_el(s22, 1, 0, 0), b = spin_el(s22, -1, 0, 0);
  EXPECT_EQ(fingerprint(a), fingerprint(b));
  EXPECT_EQ(fingerprint(a).inertia, (Inertia{2, 2, 4}));
  // Both raw Delta < 0 reduced forms land on x4c.
  const auto s = JordanAlgebra::spin(2, 3);
  const FtsElement u = spin_el(s, 1, 1, 0), v = spin_el(s, -1, 0, 1);
  EXPECT_LT(quartic_delta(u).sign(), 0);
  EXPECT_LT(quartic_delta(v).sign(), 0);
  EXPECT_EQ(canonical_form(u).label.tag, "x4c");
  EXPECT_EQ(canonical_form(v).label.tag, "x4c");
  EXPECT_EQ(orbit_label(u).tag, "x4c");
}

TEST(FtsOrbits, LabelAgreesWithReducer) {
  Rng rng(15);
  for (const auto& j : reducible()) {
    const auto tags = fts_tags(j);
    const int count = j.kind == JordanKind::Spin ? 200 : 1000;
    for (int t = 0; t < count; ++t) {
      FtsElement x;
      if (t % 2) {
        x = random_fts(rng, j, 3, 2);
      } else {
        const std::string& tag = tags[rng.uniform_int(0, static_cast<int>(tags.size()) - 1)];
        const std::optional<Scalar> k = tag[1] == '4' ? std::optional<Scalar>(rng.nonzero_rational(3, 2).abs()) : std::nullopt;
        x = apply_word(random_word(rng, j, 4), fts_representative({j, tag, k}));
      }
      if (x.is_zero()) continue;
      const FtsOrbitLabel l = orbit_label(x);
      const FtsReduction r = canonical_form(x);
      EXPECT_EQ(l.tag, r.label.tag) << j.name() << " " << x;
      EXPECT_EQ(l.rank(), rank(x));
      if (l.modulus) EXPECT_TRUE(approx_equal(*l.modulus, *r.label.modulus));
    }
  }
  const auto s23 = JordanAlgebra::spin(2, 3);
  const FtsElement x4c = fts_representative({s23, "x4c", q(1)});
  Rng r2(16);
  EXPECT_EQ(orbit_label(apply_word(random_word(r2, s23, 10), x4c)).tag, "x4c");
  EXPECT_THROW(orbit_label(FtsElement::zero(s23)), std::invalid_argument);
}

TEST(FtsOrbits, MagicLabels) {
  const auto j = JordanAlgebra::magic(CompositionAlgebra::from_name("R"));
  Rng rng(17);
  for (const auto& tag : fts_tags(j)) {
    const std::optional<Scalar> k = tag[1] == '4' ? std::optional<Scalar>(q(2)) : std::nullopt;
    const FtsElement x = apply_word(random_word(rng, j, 5), magic_fts_catalog(j, tag, k));
    const FtsOrbitLabel l = orbit_label(x);
    EXPECT_EQ(l.tag, tag);
    if (k) EXPECT_EQ(*l.modulus, q(2));
  }
}
