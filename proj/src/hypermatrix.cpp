#include "freud/hypermatrix.hpp"

#include <stdexcept>

namespace freud {

namespace {

void require_unimodular(const Mat2& m) {
  const Scalar det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (!approx_equal(det, Scalar(1))) throw std::invalid_argument("matrix does not have determinant 1");
}

int ones(int i, int j) { return i + j; }

}  // namespace

Hypermatrix222 to_hypermatrix(const FtsElement& x) {
  if (x.algebra().kind != JordanKind::ThreeR) throw std::invalid_argument("hypermatrix form needs an F_3R element");
  Hypermatrix222 h;
  h(0, 0, 0) = x.alpha;
  h(1, 1, 1) = x.beta;
  h(0, 1, 1) = x.A[0];
  h(1, 0, 1) = x.A[1];
  h(1, 1, 0) = x.A[2];
  h(1, 0, 0) = x.B[0];
  h(0, 1, 0) = x.B[1];
  h(0, 0, 1) = x.B[2];
  return h;
}

FtsElement from_hypermatrix(const Hypermatrix222& h) {
  const JordanAlgebra r3 = JordanAlgebra::three_r();
  return {h(0, 0, 0), JordanElement(r3, {h(0, 1, 1), h(1, 0, 1), h(1, 1, 0)}),
          JordanElement(r3, {h(1, 0, 0), h(0, 1, 0), h(0, 0, 1)}), h(1, 1, 1)};
}

Scalar hyperdet(const Hypermatrix222& h) {
  // Contraction -1/2 eps eps eps eps eps eps a a a a, written out.
  const Scalar &a000 = h(0, 0, 0), &a001 = h(0, 0, 1), &a010 = h(0, 1, 0), &a011 = h(0, 1, 1);
  const Scalar &a100 = h(1, 0, 0), &a101 = h(1, 0, 1), &a110 = h(1, 1, 0), &a111 = h(1, 1, 1);
  Scalar squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                   a100 * a100 * a011 * a011;
  Scalar mixed = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
                 a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
  Scalar quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
  return squares - Scalar(2) * mixed + Scalar(4) * quads;
}

Hypermatrix222 act(const Mat2& m, const Mat2& n, const Mat2& p, const Hypermatrix222& a) {
  require_unimodular(m);
  require_unimodular(n);
  require_unimodular(p);
  Hypermatrix222 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        Scalar s(0);
        for (int x = 0; x < 2; ++x) {
          for (int y = 0; y < 2; ++y) {
            for (int z = 0; z < 2; ++z) s += m[i][x] * n[j][y] * p[k][z] * a(x, y, z);
          }
        }
        r(i, j, k) = s;
      }
    }
  }
  return r;
}

Hypermatrix222 permute(const Hypermatrix222& a, const std::array<int, 3>& perm) {
  Hypermatrix222 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        const int idx[3] = {i, j, k};
        r(i, j, k) = a(idx[perm[0]], idx[perm[1]], idx[perm[2]]);
      }
    }
  }
  return r;
}

SymHypermatrix symmetrize(const Hypermatrix222& a, SymMode mode) {
  const Scalar half = Scalar::frac(1, 2), third = Scalar::frac(1, 3);
  if (mode == SymMode::Partial) {
    Vec e(6);
    for (int i = 0; i < 2; ++i) {
      e[3 * i] = a(i, 0, 0);
      e[3 * i + 1] = half * (a(i, 0, 1) + a(i, 1, 0));
      e[3 * i + 2] = a(i, 1, 1);
    }
    return {mode, e};
  }
  return {mode,
          {a(0, 0, 0), third * (a(0, 0, 1) + a(0, 1, 0) + a(1, 0, 0)), third * (a(0, 1, 1) + a(1, 0, 1) + a(1, 1, 0)),
           a(1, 1, 1)}};
}

Hypermatrix222 embed(const SymHypermatrix& s) {
  const std::size_t want = s.mode == SymMode::Partial ? 6 : 4;
  if (s.entries.size() != want) throw std::invalid_argument("symmetric hypermatrix has the wrong entry count");
  Hypermatrix222 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        r(i, j, k) = s.mode == SymMode::Partial ? s.entries[3 * i + ones(j, k)] : s.entries[i + j + k];
      }
    }
  }
  return r;
}

SymHypermatrix act_sym(const Mat2& m, const SymHypermatrix& s) {
  if (s.mode != SymMode::Total) throw std::invalid_argument("single-matrix action needs a totally symmetric cube");
  return symmetrize(act(m, m, m, embed(s)), SymMode::Total);
}

SymHypermatrix act_sym(const Mat2& m, const Mat2& n, const SymHypermatrix& s) {
  if (s.mode != SymMode::Partial) throw std::invalid_argument("two-matrix action needs a partially symmetric cube");
  return symmetrize(act(m, n, n, embed(s)), SymMode::Partial);
}

SymHypermatrix to_sym_hypermatrix(const FtsElement& x) {
  switch (x.algebra().kind) {
    case JordanKind::TwoR:
      return {SymMode::Partial, {x.alpha, x.B[1], x.A[0], x.B[0], x.A[1], x.beta}};
    case JordanKind::OneR: return {SymMode::Total, {x.alpha, x.B[0], x.A[0], x.beta}};
    default: break;
  }
  throw std::invalid_argument("symmetric hypermatrix form needs an F_2R or F_R element");
}

FtsElement from_sym_hypermatrix(const SymHypermatrix& s) {
  const Vec& e = s.entries;
  if (s.mode == SymMode::Partial) {
    if (e.size() != 6) throw std::invalid_argument("partial symmetric cube needs 6 entries");
    const JordanAlgebra r2 = JordanAlgebra::two_r();
    return {e[0], JordanElement(r2, {e[2], e[4]}), JordanElement(r2, {e[3], e[1]}), e[5]};
  }
  if (e.size() != 4) throw std::invalid_argument("total symmetric cube needs 4 entries");
  const JordanAlgebra r1 = JordanAlgebra::one_r();
  return {e[0], JordanElement(r1, {e[2]}), JordanElement(r1, {e[1]}), e[3]};
}

}  // namespace freud
