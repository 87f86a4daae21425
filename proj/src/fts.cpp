#include "freud/fts.hpp"

#include <stdexcept>

namespace freud {

namespace {

Scalar third() { return Scalar::frac(1, 3); }

// (P v Q) C = 1/2 Tr(Q,C) P + 1/6 Tr(P,Q) C - 1/2 Q x (P x C).
JordanElement vee_apply(const JordanElement& p, const JordanElement& q, const JordanElement& c) {
  return (trace_form(q, c) / Scalar(2)) * p + (trace_form(p, q) / Scalar(6)) * c -
         Scalar::frac(1, 2) * cross(q, cross(p, c));
}

bool is_zero_scaled(const FtsElement& x, const Scalar& s) {
  for (const Scalar& c : x.flat()) {
    if (!c.is_zero(s)) return false;
  }
  return true;
}

}  // namespace

FtsElement FtsElement::zero(const JordanAlgebra& alg) {
  return {Scalar(0), JordanElement::zero(alg), JordanElement::zero(alg), Scalar(0)};
}

FtsElement FtsElement::basis(const JordanAlgebra& alg, int k) {
  Vec v(flat_dim(alg));
  v.at(k) = Scalar(1);
  return from_flat(alg, v);
}

FtsElement FtsElement::from_flat(const JordanAlgebra& alg, const Vec& v) {
  const int n = alg.dim();
  if (static_cast<int>(v.size()) != flat_dim(alg)) throw std::invalid_argument("wrong FTS coordinate count");
  Vec a(v.begin() + 2, v.begin() + 2 + n), b(v.begin() + 2 + n, v.end());
  return {v[0], JordanElement(alg, a), JordanElement(alg, b), v[1]};
}

Vec FtsElement::flat() const {
  Vec v{alpha, beta};
  v.insert(v.end(), A.coeffs().begin(), A.coeffs().end());
  v.insert(v.end(), B.coeffs().begin(), B.coeffs().end());
  return v;
}

bool FtsElement::is_exact() const { return alpha.is_exact() && beta.is_exact() && A.is_exact() && B.is_exact(); }

bool FtsElement::is_zero() const { return alpha.is_zero() && beta.is_zero() && A.is_zero() && B.is_zero(); }

Scalar FtsElement::scale() const {
  Vec v = flat();
  Scalar m = max_abs(v.data(), v.size());
  return m > Scalar(1) ? m : Scalar(1);
}

FtsElement operator+(const FtsElement& x, const FtsElement& y) {
  return {x.alpha + y.alpha, x.A + y.A, x.B + y.B, x.beta + y.beta};
}

FtsElement operator-(const FtsElement& x, const FtsElement& y) {
  return {x.alpha - y.alpha, x.A - y.A, x.B - y.B, x.beta - y.beta};
}

FtsElement operator*(const Scalar& s, const FtsElement& x) { return {s * x.alpha, s * x.A, s * x.B, s * x.beta}; }

bool operator==(const FtsElement& x, const FtsElement& y) {
  return x.alpha == y.alpha && x.beta == y.beta && x.A == y.A && x.B == y.B;
}

std::ostream& operator<<(std::ostream& os, const FtsElement& x) {
  return os << "F[" << x.alpha << "; " << x.A << "; " << x.B << "; " << x.beta << "]";
}

void require_same(const FtsElement& x, const FtsElement& y) { require_same(x.A, y.A); }

FtsElement random_fts(Rng& rng, const JordanAlgebra& alg, int max_num, int max_den) {
  Scalar a = rng.rational(max_num, max_den);
  JordanElement ja = rng.jordan(alg, max_num, max_den);
  JordanElement jb = rng.jordan(alg, max_num, max_den);
  return {a, ja, jb, rng.rational(max_num, max_den)};
}

Scalar symplectic(const FtsElement& x, const FtsElement& y) {
  require_same(x, y);
  return x.alpha * y.beta - x.beta * y.alpha + trace_form(x.A, y.B) - trace_form(x.B, y.A);
}

Scalar quartic_delta(const FtsElement& x) {
  const Scalar k = x.alpha * x.beta - trace_form(x.A, x.B);
  const Scalar n = x.alpha * cubic_norm(x.A) + x.beta * cubic_norm(x.B) - trace_form(sharp(x.A), sharp(x.B));
  return -(k * k) - Scalar(4) * n;
}

Scalar delta4(const FtsElement& x, const FtsElement& y, const FtsElement& w, const FtsElement& z) {
  require_same(x, y);
  require_same(x, w);
  require_same(x, z);
  const FtsElement* v[4] = {&x, &y, &w, &z};
  Scalar total(0);
  for (int mask = 1; mask < 16; ++mask) {
    FtsElement s = FtsElement::zero(x.algebra());
    int count = 0;
    for (int i = 0; i < 4; ++i) {
      if (mask >> i & 1) {
        s = s + *v[i];
        ++count;
      }
    }
    const Scalar d = quartic_delta(s);
    total += (4 - count) % 2 ? -d : d;
  }
  return total / Scalar(24);
}

FtsElement triple(const FtsElement& x) {
  const Scalar k = x.alpha * x.beta - trace_form(x.A, x.B);
  const JordanElement sa = sharp(x.A), sb = sharp(x.B);
  const Scalar two(2);
  FtsElement t;
  t.alpha = -(x.alpha * k) - two * cubic_norm(x.B);
  t.A = k * x.A - two * (x.beta * sb - cross(x.B, sa));
  t.B = two * (x.alpha * sa - cross(x.A, sb)) - k * x.B;
  t.beta = x.beta * k + two * cubic_norm(x.A);
  return t;
}

FtsElement triple_xxy(const FtsElement& x, const FtsElement& y) {
  require_same(x, y);
  // T(x + y) - T(x - y) = 6 T(x,x,y) + 2 T(y).
  return Scalar::frac(1, 6) * (triple(x + y) - triple(x - y) - Scalar(2) * triple(y));
}

FtsElement triple3(const FtsElement& x, const FtsElement& y, const FtsElement& w) {
  require_same(x, y);
  require_same(x, w);
  FtsElement s = triple(x + y + w) - triple(x + y) - triple(x + w) - triple(y + w) + triple(x) + triple(y) + triple(w);
  return Scalar::frac(1, 6) * s;
}

FtsElement upsilon(const FtsElement& x, const FtsElement& y) {
  return Scalar(3) * triple_xxy(x, y) + symplectic(x, y) * x;
}

FtsOperator wedge(const FtsElement& x, const FtsElement& y) {
  require_same(x, y);
  // y enters as (delta, C, D, gamma).
  const Scalar &al = x.alpha, &be = x.beta, &de = y.alpha, &ga = y.beta;
  const JordanElement &a = x.A, &b = x.B, &c = y.A, &d = y.B;
  FtsOperator op;
  op.phi = Scalar(-1) * (vee(a, d) + vee(c, b));
  op.X = Scalar::frac(-1, 2) * (cross(b, d) - al * c - de * a);
  op.Y = Scalar::frac(1, 2) * (cross(a, c) - be * d - ga * b);
  op.nu = Scalar::frac(1, 4) * (trace_form(a, d) + trace_form(c, b) - Scalar(3) * (al * ga + be * de));
  return op;
}

FtsElement apply_op(const FtsOperator& op, const FtsElement& z) {
  const JordanAlgebra& j = z.algebra();
  const JordanOperator dual = trace_adjoint(j, op.phi);
  FtsElement r;
  r.alpha = z.alpha * op.nu + trace_form(op.X, z.B);
  r.A = apply(op.phi, z.A) - (op.nu * third()) * z.A + cross(op.Y, z.B) + z.beta * op.X;
  r.B = (op.nu * third()) * z.B - apply(dual, z.B) + cross(op.X, z.A) + z.alpha * op.Y;
  r.beta = -(z.beta * op.nu) + trace_form(op.Y, z.A);
  return r;
}

FtsElement wedge_apply(const FtsElement& x, const FtsElement& y, const FtsElement& z) {
  require_same(x, y);
  require_same(x, z);
  const Scalar &al = x.alpha, &be = x.beta, &de = y.alpha, &ga = y.beta;
  const JordanElement &a = x.A, &b = x.B, &c = y.A, &d = y.B;
  const JordanElement X = Scalar::frac(-1, 2) * (cross(b, d) - al * c - de * a);
  const JordanElement Y = Scalar::frac(1, 2) * (cross(a, c) - be * d - ga * b);
  const Scalar nu = Scalar::frac(1, 4) * (trace_form(a, d) + trace_form(c, b) - Scalar(3) * (al * ga + be * de));
  // phi = -(A v D + C v B); its trace adjoint is -(D v A + B v C).
  const JordanElement phi_a = Scalar(-1) * (vee_apply(a, d, z.A) + vee_apply(c, b, z.A));
  const JordanElement dual_b = Scalar(-1) * (vee_apply(d, a, z.B) + vee_apply(b, c, z.B));
  FtsElement r;
  r.alpha = z.alpha * nu + trace_form(X, z.B);
  r.A = phi_a - (nu * third()) * z.A + cross(Y, z.B) + z.beta * X;
  r.B = (nu * third()) * z.B - dual_b + cross(X, z.A) + z.alpha * Y;
  r.beta = -(z.beta * nu) + trace_form(Y, z.A);
  return r;
}

Matrix to_matrix(const JordanAlgebra& alg, const FtsOperator& op) {
  std::vector<Vec> cols;
  for (int k = 0; k < FtsElement::flat_dim(alg); ++k) cols.push_back(apply_op(op, FtsElement::basis(alg, k)).flat());
  return Matrix::from_columns(cols);
}

Matrix symplectic_gram(const JordanAlgebra& alg) {
  const int n = FtsElement::flat_dim(alg);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) g(i, k) = symplectic(FtsElement::basis(alg, i), FtsElement::basis(alg, k));
  }
  return g;
}

int rank(const FtsElement& x) {
  if (x.is_zero()) return 0;
  const Scalar s = x.scale();
  const Scalar s3 = s * s * s;
  if (!quartic_delta(x).is_zero(s3 * s)) return 4;
  if (!is_zero_scaled(triple(x), s3)) return 3;
  for (int k = 0; k < FtsElement::flat_dim(x.algebra()); ++k) {
    if (!is_zero_scaled(upsilon(x, FtsElement::basis(x.algebra(), k)), s3)) return 2;
  }
  return 1;
}

int rank_reduced(const FtsElement& x) {
  const Scalar s = x.scale();
  if (!(x.alpha - Scalar(1)).is_zero(s) || !x.B.is_zero()) throw std::invalid_argument("not of the form (1, A, 0, beta)");
  const bool beta_zero = x.beta.is_zero(s);
  if (x.A.is_zero() && beta_zero) return 1;
  bool sharp_zero = true;
  const JordanElement sa = sharp(x.A);
  for (const Scalar& c : sa.coeffs()) sharp_zero = sharp_zero && c.is_zero(s * s);
  if (sharp_zero && beta_zero) return 2;
  const Scalar gap = Scalar(4) * cubic_norm(x.A) + x.beta * x.beta;
  if (gap.is_zero(s * s * s) && !sharp_zero) return 3;
  return 4;
}

Scalar b_value(const FtsElement& y, const FtsElement& x) {
  if (y.is_zero()) throw std::invalid_argument("B_y needs y != 0");
  return symplectic(wedge_apply(x, x, y), y);
}

Matrix b_form_matrix(const FtsElement& y) {
  if (y.is_zero()) throw std::invalid_argument("B_y needs y != 0");
  const JordanAlgebra& j = y.algebra();
  const int n = FtsElement::flat_dim(j);
  // B_y(x) = 3 Delta(x, x, y, y) + 1/2 {x, y}^2, and 2 Delta(e_i, e_k, y, y) = {T(y, y, e_i), e_k}.
  std::vector<FtsElement> tyy;
  Vec sy(n);
  for (int i = 0; i < n; ++i) {
    const FtsElement e = FtsElement::basis(j, i);
    tyy.push_back(triple_xxy(y, e));
    sy[i] = symplectic(e, y);
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      m(i, k) = Scalar::frac(3, 2) * symplectic(tyy[i], FtsElement::basis(j, k)) + Scalar::frac(1, 2) * sy[i] * sy[k];
    }
  }
  return m;
}

AxiomReport verify_fts_axioms(const std::vector<std::pair<FtsElement, FtsElement>>& pairs) {
  AxiomReport r;
  if (pairs.empty()) return r;
  const JordanAlgebra& j = pairs.front().first.algebra();
  const Matrix g = symplectic_gram(j);
  r.antisymmetric = g.transpose() == Scalar(-1) * g;
  r.nondegenerate = !determinant(g).is_zero();
  for (const auto& [x, y] : pairs) {
    if (!quartic_delta(x).is_exact_zero() || !quartic_delta(y).is_exact_zero()) r.quartic_nonzero = true;
    // q(x,y,y,y) = 2 Delta(x,y,y,y) = {T(y,y,y), x}.
    const Scalar lhs = Scalar(3) * symplectic(triple_xxy(x, y), triple(y));
    const Scalar rhs = symplectic(x, y) * symplectic(triple(y), x);
    ++r.pairs_checked;
    if (!(lhs - rhs).is_zero(x.scale() * y.scale())) ++r.pairs_failed;
  }
  return r;
}

std::string to_string(AutMembership m) {
  switch (m) {
    case AutMembership::InGroup: return "in_group";
    case AutMembership::InLie: return "in_lie";
    case AutMembership::None: return "none";
  }
  return "none";
}

AutMembership aut_membership(const JordanAlgebra& alg, const Matrix& op) {
  const int n = FtsElement::flat_dim(alg);
  if (static_cast<int>(op.rows()) != n || static_cast<int>(op.cols()) != n) {
    throw std::invalid_argument("operator size does not match the FTS");
  }
  const Matrix g = symplectic_gram(alg);
  auto act = [&](const FtsElement& x) { return FtsElement::from_flat(alg, op.apply(x.flat())); };
  auto near = [](const Scalar& a, const Scalar& b) { return approx_equal(a, b); };
  auto zero_m = [](const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        if (!m(i, k).is_zero()) return false;
      }
    }
    return true;
  };

  // Quartic conditions are polynomial identities; test them on basis vectors, pair sums and samples.
  std::vector<FtsElement> probes;
  for (int i = 0; i < n; ++i) probes.push_back(FtsElement::basis(alg, i));
  for (int i = 0; i + 1 < n; ++i) probes.push_back(FtsElement::basis(alg, i) + FtsElement::basis(alg, i + 1));
  Rng rng(0x5eed);
  for (int s = 0; s < 6; ++s) probes.push_back(random_fts(rng, alg, 3, 2));

  if (zero_m(op.transpose() * g * op - g)) {
    bool ok = true;
    for (const auto& x : probes) {
      if (!near(quartic_delta(act(x)), quartic_delta(x))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // Equivariance of the Freudenthal product on samples.
      const std::size_t m = probes.size();
      for (std::size_t s = 0; s < 3; ++s) {
        const FtsElement& x = probes[m - 1 - s];
        const FtsElement& y = probes[m - 4 - s];
        const FtsElement& z = probes[s];
        const FtsElement lhs = act(wedge_apply(x, y, z));
        const FtsElement rhs = wedge_apply(act(x), act(y), act(z));
        const Vec d = (lhs - rhs).flat();
        for (const Scalar& c : d) ok = ok && c.is_zero(lhs.scale());
      }
    }
    if (ok) return AutMembership::InGroup;
  }
  if (zero_m(op.transpose() * g + g * op)) {
    for (const auto& x : probes) {
      if (!symplectic(triple(x), act(x)).is_zero(x.scale())) return AutMembership::None;
    }
    return AutMembership::InLie;
  }
  return AutMembership::None;
}

}  // namespace freud
