#include "freud/composition.hpp"

#include <array>
#include <stdexcept>

namespace freud {

namespace {

using Table = std::array<std::array<BasisProduct, 8>, 8>;

// Cayley-Dickson doubling: (a,b)(c,d) = (ac + g*conj(d)*b, d*a + b*conj(c)).
constexpr Table double_table(const Table& t, int m, int g) {
  Table out{};
  auto conj_sign = [](int k) { return k == 0 ? 1 : -1; };
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = 0; j < 2 * m; ++j) {
      BasisProduct p{};
      if (i < m && j < m) {
        p = t[i][j];
      } else if (i < m) {
        BasisProduct q = t[j - m][i];
        p = {q.sign, m + q.index};
      } else if (j < m) {
        BasisProduct q = t[i - m][j];
        p = {q.sign * conj_sign(j), m + q.index};
      } else {
        BasisProduct q = t[j - m][i - m];
        p = {g * conj_sign(j - m) * q.sign, q.index};
      }
      out[i][j] = p;
    }
  }
  return out;
}

constexpr Table build(int dim, bool split) {
  Table t{};
  t[0][0] = {1, 0};
  for (int m = 1; m < dim; m *= 2) {
    int g = (split && 2 * m == dim) ? 1 : -1;
    t = double_table(t, m, g);
  }
  return t;
}

constexpr std::array<Table, 7> kTables = {build(1, false), build(2, false), build(4, false), build(8, false),
                                          build(2, true),  build(4, true),  build(8, true)};

const Table& table(const CompositionAlgebra& alg) {
  switch (alg.dim) {
    case 1: return kTables[0];
    case 2: return kTables[alg.split ? 4 : 1];
    case 4: return kTables[alg.split ? 5 : 2];
    case 8: return kTables[alg.split ? 6 : 3];
    default: throw std::invalid_argument("composition algebra dimension must be 1, 2, 4 or 8");
  }
}

static_assert(kTables[3][1][2].index == 3 && kTables[3][1][2].sign == 1);
static_assert(kTables[6][4][4].index == 0 && kTables[6][4][4].sign == 1);

}  // namespace

void CompositionAlgebra::validate() const {
  if (dim != 1 && dim != 2 && dim != 4 && dim != 8) throw std::invalid_argument("composition dimension must be 1, 2, 4 or 8");
  if (dim == 1 && split) throw std::invalid_argument("there is no split form of R");
}

std::string CompositionAlgebra::name() const {
  static const char* names[] = {"R", "C", "H", "O"};
  int k = dim == 1 ? 0 : dim == 2 ? 1 : dim == 4 ? 2 : 3;
  return std::string(names[k]) + (split ? "s" : "");
}

CompositionAlgebra CompositionAlgebra::from_name(const std::string& n) {
  CompositionAlgebra a;
  if (n.empty() || n.size() > 2 || (n.size() == 2 && n[1] != 's')) throw std::invalid_argument("unknown composition algebra: " + n);
  switch (n[0]) {
    case 'R': a.dim = 1; break;
    case 'C': a.dim = 2; break;
    case 'H': a.dim = 4; break;
    case 'O': a.dim = 8; break;
    default: throw std::invalid_argument("unknown composition algebra: " + n);
  }
  a.split = n.size() == 2;
  a.validate();
  return a;
}

BasisProduct basis_product(const CompositionAlgebra& alg, int i, int j) {
  alg.validate();
  if (i < 0 || j < 0 || i >= alg.dim || j >= alg.dim) throw std::out_of_range("basis index");
  return table(alg)[i][j];
}

void comp_mul(const CompositionAlgebra& alg, const Scalar* x, const Scalar* y, Scalar* out) {
  const Table& t = table(alg);
  const int n = alg.dim;
  for (int k = 0; k < n; ++k) out[k] = Scalar(0);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_exact_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_exact_zero()) continue;
      const BasisProduct& p = t[i][j];
      if (p.sign > 0) {
        out[p.index] += x[i] * y[j];
      } else {
        out[p.index] -= x[i] * y[j];
      }
    }
  }
}

Scalar comp_inner(const CompositionAlgebra& alg, const Scalar* x, const Scalar* y) {
  // Re(e_i conj(e_i)) = -Re(e_i e_i) for i > 0; distinct basis elements are orthogonal.
  const Table& t = table(alg);
  Scalar s(0);
  for (int i = 0; i < alg.dim; ++i) {
    if (x[i].is_exact_zero() || y[i].is_exact_zero()) continue;
    int w = i == 0 ? 1 : -t[i][i].sign;
    if (w > 0) {
      s += x[i] * y[i];
    } else {
      s -= x[i] * y[i];
    }
  }
  return s;
}

CompositionElement::CompositionElement(CompositionAlgebra alg, Vec coeffs) : alg_(alg), c_(std::move(coeffs)) {
  alg_.validate();
  if (static_cast<int>(c_.size()) != alg_.dim) throw std::invalid_argument("coefficient count must match the algebra dimension");
}

CompositionElement CompositionElement::zero(CompositionAlgebra alg) { return {alg, Vec(alg.dim)}; }

CompositionElement CompositionElement::unit(CompositionAlgebra alg, int k) {
  Vec v(alg.dim);
  v.at(k) = Scalar(1);
  return {alg, v};
}

CompositionElement CompositionElement::conj() const {
  Vec v = c_;
  for (std::size_t k = 1; k < v.size(); ++k) v[k] = -v[k];
  return {alg_, v};
}

Scalar CompositionElement::quad_norm() const { return comp_inner(alg_, c_.data(), c_.data()); }

CompositionElement operator*(const CompositionElement& x, const CompositionElement& y) {
  if (!(x.alg_ == y.alg_)) throw std::invalid_argument("product of elements from different composition algebras");
  Vec out(x.alg_.dim);
  comp_mul(x.alg_, x.c_.data(), y.c_.data(), out.data());
  return {x.alg_, out};
}

CompositionElement operator+(const CompositionElement& x, const CompositionElement& y) {
  if (!(x.alg_ == y.alg_)) throw std::invalid_argument("sum of elements from different composition algebras");
  Vec v = x.c_;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += y.c_[k];
  return {x.alg_, v};
}

CompositionElement operator-(const CompositionElement& x, const CompositionElement& y) {
  return x + Scalar(-1) * y;
}

CompositionElement operator*(const Scalar& s, const CompositionElement& x) {
  Vec v = x.c_;
  for (auto& a : v) a *= s;
  return {x.alg_, v};
}

bool operator==(const CompositionElement& x, const CompositionElement& y) { return x.alg_ == y.alg_ && x.c_ == y.c_; }

CompositionElement mul(const CompositionElement& x, const CompositionElement& y) { return x * y; }

}  // namespace freud
