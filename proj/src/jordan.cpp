#include "freud/jordan.hpp"

#include <algorithm>
#include <stdexcept>

namespace freud {

JordanAlgebra JordanAlgebra::magic(CompositionAlgebra a) {
  a.validate();
  return {JordanKind::Magic, a, 0, 0};
}

JordanAlgebra JordanAlgebra::spin(int p, int q) {
  JordanAlgebra j{JordanKind::Spin, {}, p, q};
  j.validate();
  return j;
}

void JordanAlgebra::validate() const {
  if (kind == JordanKind::Magic) comp.validate();
  if (kind == JordanKind::Spin && (p < 1 || q < 1 || p + q < 3)) {
    throw std::invalid_argument("spin factor needs p, q >= 1 and p + q >= 3");
  }
}

int JordanAlgebra::dim() const {
  switch (kind) {
    case JordanKind::Magic: return 3 + 3 * comp.dim;
    case JordanKind::Spin: return 1 + vec_dim();
    case JordanKind::ThreeR: return 3;
    case JordanKind::TwoR: return 2;
    case JordanKind::OneR: return 1;
  }
  return 0;
}

std::string JordanAlgebra::name() const {
  switch (kind) {
    case JordanKind::Magic: return "magic:" + comp.name();
    case JordanKind::Spin: return "spin:" + std::to_string(p) + "," + std::to_string(q);
    case JordanKind::ThreeR: return "3R";
    case JordanKind::TwoR: return "2R";
    case JordanKind::OneR: return "R";
  }
  return "";
}

JordanAlgebra JordanAlgebra::parse(const std::string& s) {
  if (s == "R") return one_r();
  if (s == "2R") return two_r();
  if (s == "3R") return three_r();
  if (s.rfind("magic:", 0) == 0) return magic(CompositionAlgebra::from_name(s.substr(6)));
  if (s.rfind("spin:", 0) == 0) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("spin descriptor needs 'spin:p,q'");
    try {
      return spin(std::stoi(s.substr(5, comma - 5)), std::stoi(s.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed spin descriptor: " + s);
    }
  }
  throw std::invalid_argument("unknown Jordan algebra: " + s);
}

JordanElement::JordanElement(JordanAlgebra alg, Vec coeffs) : alg_(alg), c_(std::move(coeffs)) {
  alg_.validate();
  if (static_cast<int>(c_.size()) != alg_.dim()) throw std::invalid_argument("coefficient count does not match " + alg_.name());
}

JordanElement JordanElement::zero(const JordanAlgebra& alg) { return {alg, Vec(alg.dim())}; }

JordanElement JordanElement::basis(const JordanAlgebra& alg, int k) {
  Vec v(alg.dim());
  v.at(k) = Scalar(1);
  return {alg, v};
}

JordanElement JordanElement::one(const JordanAlgebra& alg) {
  Vec v(alg.dim());
  switch (alg.kind) {
    case JordanKind::Magic:
    case JordanKind::ThreeR: v[0] = v[1] = v[2] = Scalar(1); break;
    case JordanKind::Spin:
      v[0] = Scalar(alg.eta(0));
      v[1] = Scalar(1);
      break;
    case JordanKind::TwoR: v[0] = v[1] = Scalar(1); break;
    case JordanKind::OneR: v[0] = Scalar(1); break;
  }
  return {alg, v};
}

JordanElement JordanElement::magic(const JordanAlgebra& alg, const Scalar& alpha, const Scalar& beta,
                                   const Scalar& gamma, const Vec& a, const Vec& b, const Vec& c) {
  if (alg.kind != JordanKind::Magic) throw std::invalid_argument("not a magic algebra");
  const std::size_t d = alg.comp.dim;
  if (a.size() != d || b.size() != d || c.size() != d) throw std::invalid_argument("off-diagonal entry size mismatch");
  Vec v{alpha, beta, gamma};
  for (const Vec* x : {&a, &b, &c}) v.insert(v.end(), x->begin(), x->end());
  return {alg, v};
}

JordanElement JordanElement::diag(const JordanAlgebra& alg, const Scalar& x, const Scalar& y, const Scalar& z) {
  const std::size_t d = alg.comp.dim;
  return magic(alg, x, y, z, Vec(d), Vec(d), Vec(d));
}

JordanElement JordanElement::spin(const JordanAlgebra& alg, const Scalar& a, const Vec& v) {
  if (alg.kind != JordanKind::Spin) throw std::invalid_argument("not a spin factor");
  Vec c{a};
  c.insert(c.end(), v.begin(), v.end());
  return {alg, c};
}

CompositionElement JordanElement::off(int slot) const {
  const int d = alg_.comp.dim;
  Vec v(c_.begin() + 3 + slot * d, c_.begin() + 3 + (slot + 1) * d);
  return {alg_.comp, v};
}

bool JordanElement::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Scalar JordanElement::scale() const {
  Scalar m = max_abs(c_.data(), c_.size());
  return m > Scalar(1) ? m : Scalar(1);
}

bool JordanElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::ostream& operator<<(std::ostream& os, const JordanElement& x) {
  os << x.algebra().name() << "(";
  for (int k = 0; k < x.dim(); ++k) os << (k ? ", " : "") << x[k];
  return os << ")";
}

void require_same(const JordanElement& x, const JordanElement& y) {
  if (!(x.algebra() == y.algebra())) {
    throw std::invalid_argument("mixed Jordan algebras: " + x.algebra().name() + " vs " + y.algebra().name());
  }
}

JordanElement operator+(const JordanElement& x, const JordanElement& y) {
  require_same(x, y);
  Vec v = x.c_;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += y.c_[k];
  return {x.alg_, v};
}

JordanElement operator-(const JordanElement& x, const JordanElement& y) {
  require_same(x, y);
  Vec v = x.c_;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= y.c_[k];
  return {x.alg_, v};
}

JordanElement operator*(const Scalar& s, const JordanElement& x) {
  Vec v = x.c_;
  for (auto& a : v) a *= s;
  return {x.alg_, v};
}

bool operator==(const JordanElement& x, const JordanElement& y) { return x.alg_ == y.alg_ && x.c_ == y.c_; }

namespace {

// Metric contraction of two spin vectors.
Scalar spin_dot(const JordanAlgebra& j, const Scalar* v, const Scalar* w) {
  Scalar s(0);
  for (int i = 0; i < j.vec_dim(); ++i) {
    if (v[i].is_exact_zero() || w[i].is_exact_zero()) continue;
    if (j.eta(i) > 0) {
      s += v[i] * w[i];
    } else {
      s -= v[i] * w[i];
    }
  }
  return s;
}

// Reflection through the base-point axis; equals the metric lowering in the Lorentzian case.
int spin_reflect(const JordanAlgebra& j, int i) { return i == 0 ? j.eta(0) : -j.eta(0); }

Vec comp_product(const CompositionAlgebra& a, const Vec& x, const Vec& y) {
  Vec out(a.dim);
  comp_mul(a, x.data(), y.data(), out.data());
  return out;
}

Vec comp_conj(Vec x) {
  for (std::size_t k = 1; k < x.size(); ++k) x[k] = -x[k];
  return x;
}

JordanElement magic_sharp(const JordanElement& m) {
  const JordanAlgebra& j = m.algebra();
  const CompositionAlgebra& ca = j.comp;
  const int d = ca.dim;
  auto slot = [&](int s) { return Vec(m.coeffs().begin() + 3 + s * d, m.coeffs().begin() + 3 + (s + 1) * d); };
  const Scalar &al = m[0], &be = m[1], &ga = m[2];
  Vec a = slot(0), b = slot(1), c = slot(2);
  Vec ab = comp_conj(a), bb = comp_conj(b), cb = comp_conj(c);
  Scalar na = comp_inner(ca, a.data(), a.data());
  Scalar nb = comp_inner(ca, b.data(), b.data());
  Scalar nc = comp_inner(ca, c.data(), c.data());
  Vec na_ = comp_product(ca, cb, bb);  // conj(c) conj(b)
  Vec nb_ = comp_product(ca, ab, cb);  // conj(a) conj(c)
  Vec nc_ = comp_product(ca, bb, ab);  // conj(b) conj(a)
  for (int k = 0; k < d; ++k) {
    na_[k] -= al * a[k];
    nb_[k] -= be * b[k];
    nc_[k] -= ga * c[k];
  }
  return JordanElement::magic(j, be * ga - na, al * ga - nb, al * be - nc, na_, nb_, nc_);
}

}  // namespace

Scalar cubic_norm(const JordanElement& m) {
  const JordanAlgebra& j = m.algebra();
  const Vec& x = m.coeffs();
  switch (j.kind) {
    case JordanKind::Magic: {
      const CompositionAlgebra& ca = j.comp;
      const int d = ca.dim;
      const Scalar* a = x.data() + 3;
      const Scalar* b = a + d;
      const Scalar* c = b + d;
      Vec ab(d), abc(d);
      comp_mul(ca, a, b, ab.data());
      comp_mul(ca, ab.data(), c, abc.data());
      return x[0] * x[1] * x[2] - x[0] * comp_inner(ca, a, a) - x[1] * comp_inner(ca, b, b) -
             x[2] * comp_inner(ca, c, c) + Scalar(2) * abc[0];
    }
    case JordanKind::Spin: return x[0] * spin_dot(j, x.data() + 1, x.data() + 1);
    case JordanKind::ThreeR: return x[0] * x[1] * x[2];
    case JordanKind::TwoR: return x[0] * x[1] * x[1];
    case JordanKind::OneR: return x[0] * x[0] * x[0];
  }
  return Scalar(0);
}

Scalar norm_trilinear(const JordanElement& a, const JordanElement& b, const JordanElement& c) {
  require_same(a, b);
  require_same(a, c);
  Scalar s = cubic_norm(a + b + c) - cubic_norm(a + b) - cubic_norm(a + c) - cubic_norm(b + c) + cubic_norm(a) +
             cubic_norm(b) + cubic_norm(c);
  return s / Scalar(6);
}

Scalar trace_form(const JordanElement& m, const JordanElement& n) {
  require_same(m, n);
  const JordanAlgebra& j = m.algebra();
  const Vec& x = m.coeffs();
  const Vec& y = n.coeffs();
  switch (j.kind) {
    case JordanKind::Magic: {
      Scalar s = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
      const int d = j.comp.dim;
      for (int slot = 0; slot < 3; ++slot) {
        s += Scalar(2) * comp_inner(j.comp, x.data() + 3 + slot * d, y.data() + 3 + slot * d);
      }
      return s;
    }
    case JordanKind::Spin:
      return x[0] * y[0] + Scalar(4) * x[1] * y[1] -
             Scalar(2 * j.eta(0)) * spin_dot(j, x.data() + 1, y.data() + 1);
    case JordanKind::ThreeR: return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    case JordanKind::TwoR: return x[0] * y[0] + Scalar(2) * x[1] * y[1];
    case JordanKind::OneR: return Scalar(3) * x[0] * y[0];
  }
  return Scalar(0);
}

Scalar trace(const JordanElement& a) { return trace_form(JordanElement::one(a.algebra()), a); }

DerivedMaps derived_maps(const JordanElement& a, const JordanElement& b) {
  require_same(a, b);
  JordanElement c = JordanElement::one(a.algebra());
  DerivedMaps d;
  d.trace_a = Scalar(3) * norm_trilinear(c, c, a);
  d.quad_a = Scalar(3) * norm_trilinear(a, a, c);
  d.bilinear_s = Scalar(6) * norm_trilinear(a, b, c);
  Scalar trace_b = Scalar(3) * norm_trilinear(c, c, b);
  d.trace_bilinear = d.trace_a * trace_b - d.bilinear_s;
  return d;
}

JordanElement sharp(const JordanElement& m) {
  const JordanAlgebra& j = m.algebra();
  const Vec& x = m.coeffs();
  switch (j.kind) {
    case JordanKind::Magic: return magic_sharp(m);
    case JordanKind::Spin: {
      Vec v(x.size());
      v[0] = spin_dot(j, x.data() + 1, x.data() + 1);
      for (int i = 0; i < j.vec_dim(); ++i) v[1 + i] = Scalar(spin_reflect(j, i)) * x[0] * x[1 + i];
      return {j, v};
    }
    case JordanKind::ThreeR: return {j, {x[1] * x[2], x[0] * x[2], x[0] * x[1]}};
    case JordanKind::TwoR: return {j, {x[1] * x[1], x[0] * x[1]}};
    case JordanKind::OneR: return {j, {x[0] * x[0]}};
  }
  return m;
}

JordanElement cross(const JordanElement& a, const JordanElement& b) {
  require_same(a, b);
  const JordanAlgebra& j = a.algebra();
  const Vec& x = a.coeffs();
  const Vec& y = b.coeffs();
  switch (j.kind) {
    case JordanKind::Spin: {
      Vec v(x.size());
      v[0] = Scalar(2) * spin_dot(j, x.data() + 1, y.data() + 1);
      for (int i = 0; i < j.vec_dim(); ++i) v[1 + i] = Scalar(spin_reflect(j, i)) * (y[0] * x[1 + i] + x[0] * y[1 + i]);
      return {j, v};
    }
    case JordanKind::ThreeR:
      return {j, {x[1] * y[2] + y[1] * x[2], x[0] * y[2] + y[0] * x[2], x[0] * y[1] + y[0] * x[1]}};
    case JordanKind::TwoR: return {j, {Scalar(2) * x[1] * y[1], x[0] * y[1] + y[0] * x[1]}};
    case JordanKind::OneR: return {j, {Scalar(2) * x[0] * y[0]}};
    case JordanKind::Magic: break;
  }
  return sharp(a + b) - sharp(a) - sharp(b);
}

JordanElement sharp_by_definition(const JordanElement& a) {
  const JordanAlgebra& j = a.algebra();
  const int n = j.dim();
  Vec rhs(n);
  for (int k = 0; k < n; ++k) {
    JordanElement e = JordanElement::basis(j, k);
    Scalar six_naab = cubic_norm(Scalar(2) * a + e) - cubic_norm(Scalar(2) * a) - Scalar(2) * cubic_norm(a + e) +
                      Scalar(2) * cubic_norm(a) + cubic_norm(e);
    rhs[k] = six_naab / Scalar(2);
  }
  return {j, solve(trace_gram(j), rhs)};
}

JordanElement jordan_product(const JordanElement& a, const JordanElement& b) {
  require_same(a, b);
  const JordanAlgebra& j = a.algebra();
  JordanElement one = JordanElement::one(j);
  Scalar ta = trace(a), tb = trace(b);
  Scalar s_ab = ta * tb - trace_form(a, b);
  JordanElement r = cross(a, b) + ta * b + tb * a - s_ab * one;
  return Scalar::frac(1, 2) * r;
}

JordanElement triple_product(const JordanElement& a, const JordanElement& b, const JordanElement& c) {
  return jordan_product(jordan_product(a, b), c) + jordan_product(a, jordan_product(b, c)) -
         jordan_product(jordan_product(a, c), b);
}

int rank(const JordanElement& a) {
  if (a.is_zero()) return 0;
  Scalar s = a.scale();
  if (!cubic_norm(a).is_zero(s * s * s)) return 3;
  const JordanElement sh = sharp(a);
  const Scalar s2 = s * s;
  for (const Scalar& x : sh.coeffs()) {
    if (!x.is_zero(s2)) return 2;
  }
  return 1;
}

bool is_irreducible_idempotent(const JordanElement& e) {
  JordanElement sq = jordan_product(e, e) - e;
  return sq.is_zero() && (trace(e) - Scalar(1)).is_zero();
}

JordanElement apply(const JordanOperator& op, const JordanElement& a) { return {a.algebra(), op.apply(a.coeffs())}; }

JordanOperator vee(const JordanElement& a, const JordanElement& b) {
  require_same(a, b);
  const JordanAlgebra& j = a.algebra();
  const Scalar tab = trace_form(a, b) / Scalar(6);
  std::vector<Vec> cols;
  for (int k = 0; k < j.dim(); ++k) {
    JordanElement c = JordanElement::basis(j, k);
    JordanElement r = (trace_form(b, c) / Scalar(2)) * a + tab * c - Scalar::frac(1, 2) * cross(b, cross(a, c));
    cols.push_back(r.coeffs());
  }
  return Matrix::from_columns(cols);
}

JordanOperator left_mul(const JordanElement& a) {
  std::vector<Vec> cols;
  for (int k = 0; k < a.dim(); ++k) cols.push_back(jordan_product(a, JordanElement::basis(a.algebra(), k)).coeffs());
  return Matrix::from_columns(cols);
}

Matrix trace_gram(const JordanAlgebra& alg) {
  const int n = alg.dim();
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) g(i, k) = trace_form(JordanElement::basis(alg, i), JordanElement::basis(alg, k));
  return g;
}

JordanOperator trace_adjoint(const JordanAlgebra& alg, const JordanOperator& op) {
  Matrix g = trace_gram(alg);
  return inverse(g) * op.transpose() * g;
}

namespace {

struct Images {
  std::vector<JordanElement> basis, image;
};

Images images(const JordanAlgebra& alg, const JordanOperator& op) {
  Images im;
  for (int k = 0; k < alg.dim(); ++k) {
    im.basis.push_back(JordanElement::basis(alg, k));
    im.image.push_back(apply(op, im.basis.back()));
  }
  return im;
}

bool preserves_product(const Images& im) {
  const std::size_t n = im.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      JordanElement lhs = jordan_product(im.image[i], im.image[k]);
      // The image of e_i o e_k by linearity.
      JordanElement prod = jordan_product(im.basis[i], im.basis[k]);
      JordanElement rhs = JordanElement::zero(prod.algebra());
      for (std::size_t m = 0; m < n; ++m)
        if (!prod[static_cast<int>(m)].is_exact_zero()) rhs = rhs + prod[static_cast<int>(m)] * im.image[m];
      if (!(lhs - rhs).is_zero()) return false;
    }
  return true;
}

bool is_derivation(const Images& im) {
  const std::size_t n = im.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      JordanElement prod = jordan_product(im.basis[i], im.basis[k]);
      JordanElement lhs = JordanElement::zero(prod.algebra());
      for (std::size_t m = 0; m < n; ++m)
        if (!prod[static_cast<int>(m)].is_exact_zero()) lhs = lhs + prod[static_cast<int>(m)] * im.image[m];
      JordanElement rhs = jordan_product(im.image[i], im.basis[k]) + jordan_product(im.basis[i], im.image[k]);
      if (!(lhs - rhs).is_zero()) return false;
    }
  return true;
}

// N(x,y,z) = Tr(x cross y, z) / 6 with cached crosses.
bool scales_norm(const Images& im, const Scalar& lambda) {
  const std::size_t n = im.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      JordanElement cb = cross(im.basis[i], im.basis[k]);
      JordanElement ci = cross(im.image[i], im.image[k]);
      for (std::size_t m = k; m < n; ++m) {
        Scalar lhs = trace_form(ci, im.image[m]);
        Scalar rhs = lambda * trace_form(cb, im.basis[m]);
        if (!approx_equal(lhs, rhs)) return false;
      }
    }
  return true;
}

bool is_norm_lie(const Images& im) {
  const std::size_t n = im.basis.size();
  std::vector<std::vector<JordanElement>> crosses(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) crosses[i].push_back(cross(im.basis[i], im.basis[k]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k)
      for (std::size_t m = k; m < n; ++m) {
        Scalar s = trace_form(crosses[k][m], im.image[i]) + trace_form(crosses[i][m], im.image[k]) +
                   trace_form(crosses[i][k], im.image[m]);
        if (!s.is_zero()) return false;
      }
  return true;
}

}  // namespace

SymmetryResult symmetry_membership(const JordanAlgebra& alg, const JordanOperator& op) {
  if (op.rows() != static_cast<std::size_t>(alg.dim()) || op.cols() != op.rows()) {
    throw std::invalid_argument("operator does not act on " + alg.name());
  }
  Images im = images(alg, op);
  SymmetryResult r;
  Scalar lambda = cubic_norm(apply(op, JordanElement::one(alg)));
  if (!lambda.is_zero() && scales_norm(im, lambda)) {
    if ((lambda - Scalar(1)).is_zero()) {
      r.kind = preserves_product(im) ? SymmetryClass::Aut : SymmetryClass::Str0;
    } else {
      r.kind = SymmetryClass::Str;
    }
    r.lambda = lambda;
    return r;
  }
  if (is_derivation(im)) {
    r.kind = SymmetryClass::Der;
  } else if (is_norm_lie(im)) {
    r.kind = SymmetryClass::Str0Lie;
  }
  return r;
}

std::string to_string(SymmetryClass k) {
  switch (k) {
    case SymmetryClass::Aut: return "in_Aut";
    case SymmetryClass::Str0: return "in_Str0";
    case SymmetryClass::Str: return "in_Str";
    case SymmetryClass::Der: return "in_der";
    case SymmetryClass::Str0Lie: return "in_str0_lie";
    case SymmetryClass::None: return "none";
  }
  return "none";
}

JordanElement iso_spin_3r(const JordanElement& s) {
  if (!(s.algebra() == JordanAlgebra::spin(2, 2))) throw std::invalid_argument("expected a Spin(2,2) element");
  return {JordanAlgebra::three_r(), {s[0], s[1] + s[2], s[1] - s[2]}};
}

JordanElement iso_3r_spin(const JordanElement& t) {
  if (t.algebra().kind != JordanKind::ThreeR) throw std::invalid_argument("expected a 3R element");
  const Scalar half = Scalar::frac(1, 2);
  return {JordanAlgebra::spin(2, 2), {t[0], half * (t[1] + t[2]), half * (t[1] - t[2])}};
}

}  // namespace freud
