#include "freud/jordan_orbits.hpp"

#include <stdexcept>

namespace freud {

namespace {

void require_classifiable(const JordanAlgebra& j) {
  if (j.kind != JordanKind::Spin) throw std::invalid_argument("spin classifier needs a spin factor");
  if (j.p < 2 || j.q < 2) throw std::invalid_argument("spin classifier needs spin:p,q with p, q >= 2");
}

// Index of the first negative metric direction.
int first_negative(const JordanAlgebra& j) { return j.p - 1; }

Scalar quad(const JordanAlgebra& j, const Vec& v) {
  Scalar s(0);
  for (int i = 0; i < j.vec_dim(); ++i) {
    if (v[i].is_exact_zero()) continue;
    s += Scalar(j.eta(i)) * v[i] * v[i];
  }
  return s;
}

Vec vector_part(const JordanElement& a) { return Vec(a.coeffs().begin() + 1, a.coeffs().end()); }

// Reflection sending the block [lo, hi) of u onto sign * |u_block| e_lo; identity if already there.
// Returns whether a reflection was used.
bool block_householder(Matrix& h, const Vec& u, int lo, int hi, int sign) {
  Scalar r2(0);
  for (int i = lo; i < hi; ++i) r2 += u[i] * u[i];
  const Scalar r = sqrt(r2);
  Vec w(u.size());
  for (int i = lo; i < hi; ++i) w[i] = u[i];
  w[lo] -= Scalar(sign) * r;
  Scalar ww(0);
  for (int i = lo; i < hi; ++i) ww += w[i] * w[i];
  if (ww.is_zero(r2 > Scalar(1) ? r2 : Scalar(1))) return false;
  for (int i = lo; i < hi; ++i) {
    for (int k = lo; k < hi; ++k) h(i, k) -= Scalar(2) * w[i] * w[k] / ww;
  }
  return true;
}

// Left-multiplies by the reflection of axis i.
void negate_axis(Matrix& m, int i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

Scalar max_diff(const JordanElement& x, const JordanElement& y) {
  Scalar m(0);
  for (int k = 0; k < x.dim(); ++k) {
    Scalar d = (x[k] - y[k]).abs();
    if (d > m) m = d;
  }
  return m;
}

}  // namespace

std::string to_string(LightCone c) { return c == LightCone::Future ? "future" : "past"; }

int JordanOrbitLabel::rank() const {
  std::size_t pos = tag.find_first_of("123");
  if (pos == std::string::npos) throw std::invalid_argument("malformed orbit tag: " + tag);
  return tag[pos] - '0';
}

SpinStr0 SpinStr0::identity(const JordanAlgebra& alg) { return {Scalar(1), Matrix::identity(alg.vec_dim())}; }

SpinStr0 SpinStr0::inverse() const { return {Scalar(1) / s, freud::inverse(lorentz)}; }

JordanElement apply(const SpinStr0& g, const JordanElement& a) {
  Vec v = g.lorentz.apply(vector_part(a));
  Vec c{g.s * g.s * a[0]};
  for (const Scalar& x : v) c.push_back(x / g.s);
  return {a.algebra(), c};
}

bool is_special_orthogonal(const JordanAlgebra& alg, const Matrix& l) {
  const int n = alg.vec_dim();
  Matrix eta(n, n);
  for (int i = 0; i < n; ++i) eta(i, i) = Scalar(alg.eta(i));
  Matrix d = l.transpose() * eta * l - eta;
  Scalar scale = Scalar(1);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (l(i, k).abs() > scale) scale = l(i, k).abs();
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!d(i, k).is_zero(scale * scale)) return false;
    }
  }
  return (determinant(l) - Scalar(1)).is_zero(pow(scale, static_cast<unsigned>(n)));
}

SpinStr0 random_spin_str0(Rng& rng, const JordanAlgebra& alg, bool identity_component) {
  const int n = alg.vec_dim();
  SpinStr0 g = SpinStr0::identity(alg);
  g.s = rng.nonzero_rational().abs();
  const int steps = n < 2 ? 0 : rng.uniform_int(1, 4);
  for (int step = 0; step < steps; ++step) {
    const int i = rng.uniform_int(0, n - 1);
    int k = rng.uniform_int(0, n - 2);
    if (k >= i) ++k;
    // Rational point on the unit circle or hyperbola from a parameter t with |t| < 1.
    const Scalar t = Scalar::frac(rng.uniform_int(-4, 4), 5);
    const Scalar one_p = Scalar(1) + t * t, one_m = Scalar(1) - t * t;
    Matrix m = Matrix::identity(n);
    if (alg.eta(i) == alg.eta(k)) {
      const Scalar c = one_m / one_p, s = Scalar(2) * t / one_p;
      m(i, i) = c, m(i, k) = -s, m(k, i) = s, m(k, k) = c;
    } else {
      const Scalar c = one_p / one_m, s = Scalar(2) * t / one_m;
      m(i, i) = c, m(i, k) = s, m(k, i) = s, m(k, k) = c;
    }
    g.lorentz = m * g.lorentz;
  }
  if (!identity_component && rng.uniform_int(0, 1)) {
    // Joint reversal of one positive and one negative axis.
    Matrix m = Matrix::identity(n);
    negate_axis(m, 0);
    negate_axis(m, first_negative(alg));
    g.lorentz = m * g.lorentz;
  }
  return g;
}

JordanOrbitLabel spin_orbit_label(const JordanElement& a, OrbitMode mode) {
  const JordanAlgebra& j = a.algebra();
  require_classifiable(j);
  if (a.is_zero()) throw std::invalid_argument("zero element has no orbit label");
  const Scalar scale = a.scale();
  const Vec v = vector_part(a);
  const Scalar qv = quad(j, v);
  const bool a_zero = a[0].is_zero(scale);
  bool v_zero = true;
  for (const Scalar& x : v) v_zero = v_zero && x.is_zero(scale);
  const bool q_zero = qv.is_zero(scale * scale);

  JordanOrbitLabel out{j, "", std::nullopt, std::nullopt};
  if (!a_zero && !q_zero) {
    out.tag = a[0].sign() > 0 ? "A3a" : "A3b";
    out.modulus = Scalar(a[0].sign()) * a[0] * qv;
  } else if (a_zero && !q_zero) {
    out.tag = qv.sign() > 0 ? "A2a" : "A2b";
  } else if (!a_zero && !v_zero) {
    out.tag = a[0].sign() > 0 ? "A2c" : "A2d";
  } else if (!a_zero) {
    out.tag = a[0].sign() > 0 ? "A1a" : "A1b";
  } else {
    out.tag = "A1c";
  }
  if (mode == OrbitMode::IdentityComponent && j.p == 2 && !v_zero && (q_zero || qv.sign() > 0)) {
    out.component = v[0].sign() > 0 ? LightCone::Future : LightCone::Past;
  }
  return out;
}

JordanElement spin_representative(const JordanOrbitLabel& label) {
  const JordanAlgebra& j = label.family;
  require_classifiable(j);
  const int f = first_negative(j);
  const Scalar half = Scalar::frac(1, 2);
  Scalar a(0), t0(0), t1(0);
  const std::string& t = label.tag;
  if (t == "A1a") a = Scalar(1);
  else if (t == "A1b") a = Scalar(-1);
  else if (t == "A1c") t0 = half, t1 = half;
  else if (t == "A2a") t0 = Scalar(1);
  else if (t == "A2b") t1 = Scalar(1);
  else if (t == "A2c") a = Scalar(1), t0 = half, t1 = half;
  else if (t == "A2d") a = Scalar(-1), t0 = half, t1 = half;
  else if (t == "A3a" || t == "A3b") {
    if (!label.modulus || label.modulus->is_exact_zero()) throw std::invalid_argument("rank-3 tag needs a nonzero modulus");
    const Scalar& k = *label.modulus;
    a = Scalar(t == "A3a" ? 1 : -1);
    t0 = half * (Scalar(1) + k);
    t1 = half * (Scalar(1) - k);
  } else {
    throw std::invalid_argument("unknown spin orbit tag: " + t);
  }
  if (label.component == LightCone::Past) t0 = -t0, t1 = -t1;
  Vec v(j.vec_dim());
  v[0] = t0;
  v[f] = t1;
  return JordanElement::spin(j, a, v);
}

JordanReduction spin_canonical_form(const JordanElement& a, OrbitMode mode) {
  const JordanAlgebra& j = a.algebra();
  JordanReduction out;
  out.label = spin_orbit_label(a, mode);
  out.representative = spin_representative(out.label);
  const int n = j.vec_dim();
  const int f = first_negative(j);
  const Scalar scale = a.scale();
  const bool a_zero = a[0].is_zero(scale);
  const Vec v = vector_part(a);
  const Scalar qv = quad(j, v);

  // Dilatation fixing |a| = 1, or |Q(v)| = 1 when a vanishes.
  SpinStr0 g = SpinStr0::identity(j);
  if (!a_zero) g.s = sqrt(Scalar(1) / a[0].abs());
  else if (!qv.is_zero(scale * scale)) g.s = sqrt(qv.abs());
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = v[i] / g.s;

  const Vec target = vector_part(out.representative);
  const Scalar t0 = target[0], t1 = target[f];
  const bool v_zero = t0.is_exact_zero() && t1.is_exact_zero();
  if (!v_zero) {
    const Scalar qt = quad(j, target);
    const bool null = qt.is_exact_zero();
    const bool need_x = null || qt.sign() > 0;
    const bool need_y = null || qt.sign() < 0;
    auto want = [](const Scalar& s) { return s.sign() < 0 ? -1 : 1; };

    // Rotate each definite block onto its leading axis, keeping each block special.
    Matrix rot = Matrix::identity(n);
    if (f >= 2 && block_householder(rot, u, 0, f, want(t0))) negate_axis(rot, 1);
    if (n - f >= 2 && block_householder(rot, u, f, n, want(t1))) negate_axis(rot, f + 1);
    Vec w = rot.apply(u);

    // Orientation fixes where a block is one-dimensional.
    const bool flip_x = need_x && w[0].sign() * want(t0) < 0;
    const bool flip_y = need_y && w[f].sign() * want(t1) < 0;
    Matrix flips = Matrix::identity(n);
    if (flip_x) negate_axis(flips, 0);
    if (flip_y) negate_axis(flips, f);
    if (flip_x != flip_y) {
      if (n > 2) {
        // Any axis outside the plane is already zero.
        negate_axis(flips, f == 1 ? 2 : 1);
      } else if (!(flip_x ? need_y : need_x)) {
        negate_axis(flips, flip_x ? f : 0);
      }
      // Otherwise Spin(2,2) needs an improper reflection: E2 and E3 are not related by SO(1,1).
    }
    w = flips.apply(w);

    // Boost in the (0, f) plane matching light-cone coordinates.
    const Scalar up = w[0] + w[f], um = w[0] - w[f];
    const Scalar tp = t0 + t1, tm = t0 - t1;
    Scalar e = !up.is_zero(scale) ? tp / up : um / tm;
    const Scalar ch = (e + Scalar(1) / e) / Scalar(2), sh = (e - Scalar(1) / e) / Scalar(2);
    Matrix boost = Matrix::identity(n);
    boost(0, 0) = ch, boost(0, f) = sh, boost(f, 0) = sh, boost(f, f) = ch;
    g.lorentz = boost * flips * rot;
  }
  out.witness = g;
  out.residual = max_diff(apply(g, a), out.representative);
  return out;
}

JordanElement magic_rep_catalog(const JordanAlgebra& alg, const std::string& tag, const std::optional<Scalar>& k) {
  if (alg.kind != JordanKind::Magic) throw std::invalid_argument("catalog needs a magic family");
  auto d = [&](int x, int y, const Scalar& z) { return JordanElement::diag(alg, Scalar(x), Scalar(y), z); };
  if (tag == "1a") return d(1, 0, Scalar(0));
  if (tag == "1b") return d(-1, 0, Scalar(0));
  if (tag == "2a") return d(1, 1, Scalar(0));
  if (tag == "2b") return d(-1, 1, Scalar(0));
  if (tag == "2c") return d(-1, -1, Scalar(0));
  if (tag == "3a" || tag == "3b") {
    if (!k || k->is_exact_zero()) throw std::invalid_argument("rank-3 tag needs a nonzero modulus");
    return tag == "3a" ? d(1, 1, *k) : d(-1, -1, *k);
  }
  throw std::invalid_argument("unknown magic orbit tag: " + tag);
}

}  // namespace freud
