#include "freud/transform.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace freud {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

void require_alg(const JordanAlgebra& alg, const FtsElement& x) {
  if (!(alg == x.algebra())) throw std::invalid_argument("transformation over " + alg.name() + " applied to " + x.algebra().name());
}

TauMove unchecked_tau(const JordanAlgebra& alg, const JordanOperator& tau, const Scalar& lambda) {
  return {alg, tau, lambda, trace_adjoint(alg, inverse(tau))};
}

Matrix operator_from(const JordanAlgebra& alg, const std::function<JordanElement(const JordanElement&)>& f) {
  std::vector<Vec> cols;
  for (int k = 0; k < alg.dim(); ++k) cols.push_back(f(JordanElement::basis(alg, k)).coeffs());
  return Matrix::from_columns(cols);
}

// Hermitian 3x3 grid of composition coefficient vectors.
using Grid = std::array<std::array<Vec, 3>, 3>;

Vec conj_vec(Vec v) {
  for (std::size_t k = 1; k < v.size(); ++k) v[k] = -v[k];
  return v;
}

Grid to_grid(const JordanElement& x) {
  const int d = x.algebra().comp.dim;
  const Vec& c = x.coeffs();
  auto slot = [&](int s) { return Vec(c.begin() + 3 + s * d, c.begin() + 3 + (s + 1) * d); };
  auto real = [&](const Scalar& r) {
    Vec v(d);
    v[0] = r;
    return v;
  };
  Grid g;
  const Vec a = slot(0), b = slot(1), cc = slot(2);
  g[0] = {real(c[0]), cc, conj_vec(b)};
  g[1] = {conj_vec(cc), real(c[1]), a};
  g[2] = {b, conj_vec(a), real(c[2])};
  return g;
}

JordanElement from_grid(const JordanAlgebra& alg, const Grid& g) {
  Vec v{g[0][0][0], g[1][1][0], g[2][2][0]};
  for (const Vec* s : {&g[1][2], &g[2][0], &g[0][1]}) v.insert(v.end(), s->begin(), s->end());
  return {alg, v};
}

}  // namespace

TauMove make_tau(const JordanAlgebra& alg, const JordanOperator& tau, const Scalar& lambda) {
  const SymmetryResult r = symmetry_membership(alg, tau);
  const bool in_str = r.kind == SymmetryClass::Aut || r.kind == SymmetryClass::Str0 || r.kind == SymmetryClass::Str;
  if (!in_str || !approx_equal(r.lambda, lambda)) {
    throw std::invalid_argument("tau is not a structure-group element with factor " + lambda.str());
  }
  return unchecked_tau(alg, tau, lambda);
}

FtsElement apply(const FtsTransformation& t, const FtsElement& x) {
  return std::visit(
      Overload{
          [&](const PhiMove& m) {
            require_same(m.C, x.A);
            const JordanElement cs = sharp(m.C);
            return FtsElement{x.alpha + trace_form(x.B, m.C) + trace_form(x.A, cs) + x.beta * cubic_norm(m.C),
                              x.A + x.beta * m.C, x.B + cross(x.A, m.C) + x.beta * cs, x.beta};
          },
          [&](const PsiMove& m) {
            require_same(m.D, x.A);
            const JordanElement ds = sharp(m.D);
            return FtsElement{x.alpha, x.A + cross(x.B, m.D) + x.alpha * ds, x.B + x.alpha * m.D,
                              x.beta + trace_form(x.A, m.D) + trace_form(x.B, ds) + x.alpha * cubic_norm(m.D)};
          },
          [&](const TauMove& m) {
            require_alg(m.alg, x);
            return FtsElement{x.alpha / m.lambda, apply(m.tau, x.A), apply(m.dual_inverse, x.B), m.lambda * x.beta};
          },
          [&](const ZeeMove&) { return FtsElement{-x.beta, -x.B, x.A, x.alpha}; },
      },
      t);
}

FtsElement apply_word(const TransformationWord& w, const FtsElement& x) {
  FtsElement r = x;
  for (const auto& t : w) r = freud::apply(t, r);
  return r;
}

FtsTransformation invert(const FtsTransformation& t) {
  return std::visit(Overload{
                        [](const PhiMove& m) -> FtsTransformation { return PhiMove{-m.C}; },
                        [](const PsiMove& m) -> FtsTransformation { return PsiMove{-m.D}; },
                        [](const TauMove& m) -> FtsTransformation {
                          return TauMove{m.alg, inverse(m.tau), Scalar(1) / m.lambda, trace_adjoint(m.alg, m.tau)};
                        },
                        [](const ZeeMove&) -> FtsTransformation { return ZeeMove{}; },
                    },
                    t);
}

TransformationWord invert(const TransformationWord& w) {
  TransformationWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (std::holds_alternative<ZeeMove>(*it)) {
      r.insert(r.end(), 3, ZeeMove{});
    } else {
      r.push_back(invert(*it));
    }
  }
  return r;
}

TransformationWord compose(const TransformationWord& w1, const TransformationWord& w2) {
  TransformationWord r = w1;
  r.insert(r.end(), w2.begin(), w2.end());
  return r;
}

Matrix word_matrix(const JordanAlgebra& alg, const TransformationWord& w) {
  std::vector<Vec> cols;
  for (int k = 0; k < FtsElement::flat_dim(alg); ++k) cols.push_back(apply_word(w, FtsElement::basis(alg, k)).flat());
  return Matrix::from_columns(cols);
}

std::string move_name(const FtsTransformation& t) {
  static const char* names[] = {"phi", "psi", "tau", "zee"};
  return names[t.index()];
}

TauMove spin_str0_move(const JordanAlgebra& alg, const SpinStr0& g) {
  const int n = alg.vec_dim();
  Matrix m(n + 1, n + 1);
  m(0, 0) = g.s * g.s;
  const Scalar inv = Scalar(1) / g.s;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m(i + 1, k + 1) = inv * g.lorentz(i, k);
  }
  return unchecked_tau(alg, m, Scalar(1));
}

TauMove magic_congruence(const JordanAlgebra& alg, const Matrix& p) {
  if (alg.kind != JordanKind::Magic) throw std::invalid_argument("congruence needs a magic algebra");
  const int d = alg.comp.dim;
  auto act = [&](const JordanElement& x) {
    const Grid g = to_grid(x);
    Grid y;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Vec e(d);
        for (int k = 0; k < 3; ++k) {
          for (int l = 0; l < 3; ++l) {
            const Scalar w = p(i, k) * p(j, l);
            if (w.is_exact_zero()) continue;
            for (int c = 0; c < d; ++c) e[c] += w * g[k][l][c];
          }
        }
        y[i][j] = e;
      }
    }
    return from_grid(alg, y);
  };
  const Scalar det = determinant(p);
  return unchecked_tau(alg, operator_from(alg, act), det * det);
}

TauMove str_with_factor(const JordanAlgebra& alg, const Scalar& f) {
  if (f.is_zero()) throw std::invalid_argument("structure factor must be nonzero");
  Matrix m = Matrix::identity(alg.dim());
  switch (alg.kind) {
    case JordanKind::Spin:
    case JordanKind::ThreeR:
    case JordanKind::TwoR: m(0, 0) = f; break;
    case JordanKind::OneR: m(0, 0) = cbrt(f); break;
    case JordanKind::Magic: {
      Matrix p = Matrix::identity(3);
      p(0, 0) = Scalar(1) / f;
      TauMove c = magic_congruence(alg, p);
      return unchecked_tau(alg, f * c.tau, f);
    }
  }
  return unchecked_tau(alg, m, f);
}

std::array<JordanElement, 3> e_frame(const JordanAlgebra& alg) {
  switch (alg.kind) {
    case JordanKind::Magic:
      return {JordanElement::diag(alg, 1, 0, 0), JordanElement::diag(alg, 0, 1, 0), JordanElement::diag(alg, 0, 0, 1)};
    case JordanKind::ThreeR:
      return {JordanElement::basis(alg, 0), JordanElement::basis(alg, 1), JordanElement::basis(alg, 2)};
    case JordanKind::Spin: {
      if (alg.p < 2 || alg.q < 2) break;
      const int f = alg.p - 1;
      const Scalar h = Scalar::frac(1, 2);
      Vec v2(alg.vec_dim()), v3(alg.vec_dim());
      v2[0] = v3[0] = h;
      v2[f] = h;
      v3[f] = -h;
      return {JordanElement::spin(alg, 1, Vec(alg.vec_dim())), JordanElement::spin(alg, 0, v2),
              JordanElement::spin(alg, 0, v3)};
    }
    default: break;
  }
  throw std::invalid_argument("no E-frame for " + alg.name());
}

TransformationWord zee_along(const JordanElement& e) { return {PhiMove{-e}, PsiMove{e}, PhiMove{-e}}; }

TauMove e_frame_scaling(const JordanAlgebra& alg, const Scalar& d1, const Scalar& d2, const Scalar& d3) {
  const Scalar lambda = d1 * d2 * d3;
  if (alg.kind == JordanKind::ThreeR) {
    Matrix m(3, 3);
    m(0, 0) = d1, m(1, 1) = d2, m(2, 2) = d3;
    return unchecked_tau(alg, m, lambda);
  }
  if (alg.kind != JordanKind::Spin || alg.p < 2 || alg.q < 2) {
    throw std::invalid_argument("E-frame scaling needs Spin(p,q) with p, q >= 2 or 3R");
  }
  if (!((d2 * d3).sign() > 0)) throw std::invalid_argument("E-frame scaling needs d2 d3 > 0");
  const int n = alg.vec_dim(), f = alg.p - 1;
  const Scalar h = Scalar::frac(1, 2), rest = sqrt(d2 * d3);
  Matrix m(n + 1, n + 1);
  m(0, 0) = d1;
  for (int i = 1; i <= n; ++i) m(i, i) = rest;
  // t0 = (a2 + a3)/2, t1 = (a2 - a3)/2 with a2 = t0 + t1, a3 = t0 - t1.
  m(1, 1) = h * (d2 + d3);
  m(1, 1 + f) = h * (d2 - d3);
  m(1 + f, 1) = h * (d2 - d3);
  m(1 + f, 1 + f) = h * (d2 + d3);
  return unchecked_tau(alg, m, lambda);
}

TauMove random_tau(Rng& rng, const JordanAlgebra& alg) {
  const int choice = rng.uniform_int(0, 2);
  if (choice == 0) {
    const Scalar t = rng.nonzero_rational(3, 2);
    return unchecked_tau(alg, t * Matrix::identity(alg.dim()), t * t * t);
  }
  switch (alg.kind) {
    case JordanKind::Spin: {
      const bool proper_only = alg.p < 2 || alg.q < 2;
      return spin_str0_move(alg, random_spin_str0(rng, alg, proper_only || choice == 1));
    }
    case JordanKind::ThreeR: {
      Matrix m(3, 3);
      std::array<int, 3> perm{0, 1, 2};
      for (int i = 2; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
      Scalar lambda(1);
      for (int i = 0; i < 3; ++i) {
        const Scalar d = choice == 1 ? rng.nonzero_rational(3, 2) : Scalar(1);
        m(perm[i], i) = d;
        lambda *= d;
      }
      return unchecked_tau(alg, m, lambda);
    }
    case JordanKind::TwoR: {
      const Scalar a = rng.nonzero_rational(3, 2), b = rng.nonzero_rational(3, 2);
      Matrix m(2, 2);
      m(0, 0) = a, m(1, 1) = b;
      return unchecked_tau(alg, m, a * b * b);
    }
    case JordanKind::Magic: {
      Matrix p = Matrix::identity(3);
      const int shears = rng.uniform_int(1, 3);
      for (int s = 0; s < shears; ++s) {
        const int i = rng.uniform_int(0, 2);
        int k = rng.uniform_int(0, 1);
        if (k >= i) ++k;
        Matrix e = Matrix::identity(3);
        e(i, k) = rng.nonzero_rational(2, 2);
        p = e * p;
      }
      if (choice == 2) {
        const Scalar f = rng.nonzero_rational(2, 2);
        for (int k = 0; k < 3; ++k) p(0, k) = f * p(0, k);
      }
      return magic_congruence(alg, p);
    }
    case JordanKind::OneR: break;
  }
  const Scalar t = rng.nonzero_rational(3, 2);
  return unchecked_tau(alg, t * Matrix::identity(alg.dim()), t * t * t);
}

TransformationWord random_word(Rng& rng, const JordanAlgebra& alg, int length) {
  if (length < 0) throw std::invalid_argument("word length must be >= 0");
  TransformationWord w;
  auto small = [&]() {
    JordanElement e = rng.sparse_jordan(alg);
    for (int k = 0; k < e.dim(); ++k) {
      if (!e[k].is_exact_zero()) e[k] = Scalar::frac(rng.uniform_int(-2, 2), rng.uniform_int(1, 2));
    }
    return e;
  };
  for (int i = 0; i < length; ++i) {
    switch (rng.uniform_int(0, 3)) {
      case 0: w.push_back(PhiMove{small()}); break;
      case 1: w.push_back(PsiMove{small()}); break;
      case 2: w.push_back(random_tau(rng, alg)); break;
      default: w.push_back(ZeeMove{}); break;
    }
  }
  return w;
}

TransformationWord random_word(const JordanAlgebra& alg, int length, std::uint64_t seed) {
  Rng rng(seed);
  return random_word(rng, alg, length);
}

TauMove sl2_diag(const Scalar& mu) {
  const JordanAlgebra r = JordanAlgebra::one_r();
  Matrix m(1, 1);
  m(0, 0) = mu;
  return unchecked_tau(r, m, mu * mu * mu);
}

TransformationWord sl2_word(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  const JordanAlgebra r = JordanAlgebra::one_r();
  if (!approx_equal(a * d - b * c, Scalar(1))) throw std::invalid_argument("matrix is not in SL(2)");
  auto one = [&](const Scalar& v) { return JordanElement(r, {v}); };
  // Rightmost factor acts first.
  if (!a.is_zero()) {
    // [[a,b],[c,d]] = [[1,0],[c/a,1]] diag(a, 1/a) [[1,b/a],[0,1]]
    return {PhiMove{one(b / a)}, sl2_diag(Scalar(1) / a), PsiMove{one(c / a)}};
  }
  // [[0,b],[c,d]] = Z diag(c, 1/c) [[1,d/c],[0,1]]
  return {PhiMove{one(d / c)}, sl2_diag(Scalar(1) / c), ZeeMove{}};
}

}  // namespace freud
