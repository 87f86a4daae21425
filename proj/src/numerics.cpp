#include "freud/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace freud {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("ragged column list");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix/vector size mismatch");
  Vec out(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Scalar s(0);
    for (std::size_t j = 0; j < c_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_exact_zero() && !v[j].is_exact_zero()) s += a * v[j];
    }
    out[i] = s;
  }
  return out;
}

bool Matrix::is_exact() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_exact(); });
}

bool Matrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if (!approx_equal((*this)(i, j), (*this)(j, i))) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix product size mismatch");
  Matrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_exact_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_exact_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix difference size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

namespace {

Scalar matrix_scale(const Matrix& m) {
  Scalar s(0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Scalar a = m(i, j).abs();
      if (a > s) s = a;
    }
  return s;
}

// Row index of the pivot in column k at or below row k, or -1.
long pick_pivot(const Matrix& m, std::size_t k, const Scalar& scale) {
  long best = -1;
  Scalar best_abs(0);
  for (std::size_t i = k; i < m.rows(); ++i) {
    const Scalar& v = m(i, k);
    if (v.is_zero(scale)) continue;
    if (m.is_exact()) return static_cast<long>(i);
    Scalar a = v.abs();
    if (best < 0 || a > best_abs) {
      best = static_cast<long>(i);
      best_abs = a;
    }
  }
  return best;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Scalar determinant(const Matrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = m0;
  const std::size_t n = m.rows();
  Scalar scale = matrix_scale(m), det(1);
  for (std::size_t k = 0; k < n; ++k) {
    long p = pick_pivot(m, k, scale);
    if (p < 0) return Scalar(0);
    if (static_cast<std::size_t>(p) != k) {
      swap_rows(m, k, static_cast<std::size_t>(p));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_exact_zero()) continue;
      Scalar f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m0.rows();
  Matrix m = m0, inv = Matrix::identity(n);
  Scalar scale = matrix_scale(m);
  for (std::size_t k = 0; k < n; ++k) {
    long p = pick_pivot(m, k, scale);
    if (p < 0) throw std::domain_error("singular matrix");
    swap_rows(m, k, static_cast<std::size_t>(p));
    swap_rows(inv, k, static_cast<std::size_t>(p));
    Scalar d = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_exact_zero()) continue;
      Scalar f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(k, j).is_exact_zero()) m(i, j) -= f * m(k, j);
        if (!inv(k, j).is_exact_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Vec solve(const Matrix& m, const Vec& b) { return inverse(m).apply(b); }

Inertia inertia(const Matrix& s0) {
  if (s0.rows() != s0.cols() || !s0.is_symmetric()) throw std::invalid_argument("inertia needs a symmetric matrix");
  Matrix s = s0;
  const std::size_t n = s.rows();
  const bool exact = s.is_exact();
  Scalar scale = matrix_scale(s);
  Inertia out;
  auto swap_both = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    swap_rows(s, a, b);
    for (std::size_t i = 0; i < n; ++i) std::swap(s(i, a), s(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    long piv = -1;
    Scalar best(0);
    for (std::size_t i = k; i < n; ++i) {
      if (s(i, i).is_zero(scale)) continue;
      if (exact) {
        piv = static_cast<long>(i);
        break;
      }
      if (piv < 0 || s(i, i).abs() > best) {
        piv = static_cast<long>(i);
        best = s(i, i).abs();
      }
    }
    if (piv < 0) {
      // Zero diagonal: fold an off-diagonal entry onto the diagonal.
      std::size_t fi = n, fj = n;
      for (std::size_t i = k; i < n && fi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!s(i, j).is_zero(scale)) {
            fi = i;
            fj = j;
            break;
          }
      if (fi == n) {
        out.zero += static_cast<int>(n - k);
        return out;
      }
      for (std::size_t c = 0; c < n; ++c) s(fi, c) += s(fj, c);
      for (std::size_t r = 0; r < n; ++r) s(r, fi) += s(r, fj);
      piv = static_cast<long>(fi);
    }
    swap_both(k, static_cast<std::size_t>(piv));
    const Scalar d = s(k, k);
    (d.sign() > 0 ? out.positive : out.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s(i, k).is_exact_zero()) continue;
      Scalar f = s(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) s(i, j) -= f * s(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      s(i, k) = Scalar(0);
      s(k, i) = Scalar(0);
    }
  }
  return out;
}

Scalar poly_eval(const Vec& c, const Scalar& x) {
  Scalar r(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

// Monic cubic x^3 + a x^2 + b x + c.
struct Monic {
  Scalar a, b, c;
  Scalar eval(const Scalar& x) const { return ((x + a) * x + b) * x + c; }
  Scalar deriv(const Scalar& x) const { return (Scalar(3) * x + Scalar(2) * a) * x + b; }
};

Scalar bisect(const Monic& f, Scalar lo, Scalar hi, int iters) {
  int slo = f.eval(lo).sign();
  for (int i = 0; i < iters; ++i) {
    Scalar mid = (lo + hi) / Scalar(2);
    int sm = f.eval(mid).sign();
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Scalar x = (lo + hi) / Scalar(2);
  for (int i = 0; i < 3; ++i) {
    Scalar d = f.deriv(x);
    if (d.is_zero()) break;
    Scalar nx = x - f.eval(x) / d;
    if (nx < lo || nx > hi) break;
    x = nx;
  }
  return x;
}

// Simple real roots of a cubic with non-zero discriminant, as floats.
std::vector<Scalar> isolate(const Monic& fq, const Precision& p) {
  Monic f{Scalar(fq.a.to_bigfloat(p)), Scalar(fq.b.to_bigfloat(p)), Scalar(fq.c.to_bigfloat(p))};
  Scalar r = Scalar(1) + std::max({f.a.abs(), f.b.abs(), f.c.abs()});
  const int iters = p.bits + 8 + static_cast<int>(std::log2(std::max(2.0, r.to_double())));
  std::vector<Scalar> cuts{-r};
  Scalar dd = f.a * f.a - Scalar(3) * f.b;
  if (dd.sign() > 0) {
    Scalar s = sqrt(dd, p);
    cuts.push_back((-f.a - s) / Scalar(3));
    cuts.push_back((-f.a + s) / Scalar(3));
  }
  cuts.push_back(r);
  std::vector<Scalar> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    int s0 = f.eval(cuts[i]).sign(), s1 = f.eval(cuts[i + 1]).sign();
    if (s0 == 0 && i == 0) roots.push_back(cuts[i]);
    if (s1 == 0) {
      roots.push_back(cuts[i + 1]);
      continue;
    }
    if (s0 != 0 && s0 != s1) roots.push_back(bisect(f, cuts[i], cuts[i + 1], iters));
  }
  return roots;
}

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> convergents(const Rational& x, const mpz_class& max_den) {
  std::vector<Rational> out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  Rational rest = x;
  for (int i = 0; i < 400; ++i) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class h = a * h0 + h1, k = a * k0 + k1;
    if (abs(k) > max_den) break;
    Rational c(h, k);
    c.canonicalize();
    out.push_back(c);
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    Rational frac = rest - Rational(a);
    if (sgn(frac) == 0) break;
    rest = 1 / frac;
  }
  return out;
}

std::vector<Root> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c, const Precision& p) {
  // a x^2 + b x + c, a != 0.
  Scalar disc = b * b - Scalar(4) * a * c;
  Scalar scale = b * b + (Scalar(4) * a * c).abs();
  if (disc.is_zero(scale)) return {{-b / (Scalar(2) * a), 2}};
  if (disc.sign() < 0) return {};
  Scalar s = sqrt(disc, p);
  Scalar r1 = (-b - s) / (Scalar(2) * a), r2 = (-b + s) / (Scalar(2) * a);
  if (r1 > r2) std::swap(r1, r2);
  return {{r1, 1}, {r2, 1}};
}

}  // namespace

std::vector<Root> real_roots_cubic(const Scalar& c3, const Scalar& c2, const Scalar& c1, const Scalar& c0,
                                   const Precision& p) {
  if (c3.is_zero(max_abs(std::vector<Scalar>{c2, c1, c0}.data(), 3)) || c3.is_exact_zero()) {
    throw std::domain_error("cubic has a vanishing leading coefficient");
  }
  Monic f{c2 / c3, c1 / c3, c0 / c3};
  const Scalar& a = f.a;
  const Scalar& b = f.b;
  const Scalar& c = f.c;
  Scalar disc = Scalar(18) * a * b * c - Scalar(4) * a * a * a * c + a * a * b * b - Scalar(4) * b * b * b -
                Scalar(27) * c * c;
  Scalar coef_scale = Scalar(1) + std::max({a.abs(), b.abs(), c.abs()});
  Scalar disc_scale = pow(coef_scale, 6);
  std::vector<Root> out;
  if (disc.is_zero(disc_scale)) {
    Scalar dd = a * a - Scalar(3) * b;
    if (dd.is_zero(pow(coef_scale, 2))) return {{-a / Scalar(3), 3}};
    Scalar dbl = (Scalar(9) * c - a * b) / (Scalar(2) * dd);
    Scalar single = -a - Scalar(2) * dbl;
    out = {{dbl, 2}, {single, 1}};
  } else if (a.is_exact() && b.is_exact() && c.is_exact()) {
    // Primitive integer form; any rational root has denominator dividing the leading term.
    Rational qa = a.rational(), qb = b.rational(), qc = c.rational();
    mpz_class l = lcm(lcm(qa.get_den(), qb.get_den()), qc.get_den());
    mpz_class n2 = mpz_class(qa * l), n1 = mpz_class(qb * l), n0 = mpz_class(qc * l);
    mpz_class g = gcd(gcd(gcd(l, n2), n1), n0);
    mpz_class lead = l / g;
    Precision q = p;
    q.bits = std::max<int>(p.bits, 2 * static_cast<int>(mpz_sizeinbase(lead.get_mpz_t(), 2)) +
                                       static_cast<int>(std::log2(std::max(2.0, coef_scale.to_double()))) + 96);
    std::vector<Scalar> approx = isolate(f, q);
    for (const Scalar& x : approx) {
      for (const Rational& cand : convergents(x.bigfloat().to_rational(), lead)) {
        if (f.eval(Scalar(cand)).is_exact_zero()) {
          // Deflate by the exact root and solve the quadratic exactly where possible.
          Scalar r(cand);
          Scalar q1 = a + r, q0 = b + r * q1;
          out = quadratic_roots(Scalar(1), q1, q0, p);
          out.push_back({r, 1});
          break;
        }
      }
      if (!out.empty()) break;
    }
    if (out.empty()) {
      for (const Scalar& x : approx) {
        BigFloat v = x.to_bigfloat();
        BigFloat w(p.bits, p.tol_log2);
        mpfr_set(w.get(), v.get(), MPFR_RNDN);
        out.push_back({Scalar(w), 1});
      }
    }
  } else {
    for (const Scalar& x : isolate(f, p)) out.push_back({x, 1});
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) { return x.value < y.value; });
  return out;
}

}  // namespace freud
