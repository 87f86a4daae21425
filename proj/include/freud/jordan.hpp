#pragma once

#include <ostream>
#include <string>

#include "freud/composition.hpp"
#include "freud/numerics.hpp"

namespace freud {

enum class JordanKind { Magic, Spin, ThreeR, TwoR, OneR };

// Descriptor of a cubic Jordan algebra with its base point.
struct JordanAlgebra {
  JordanKind kind = JordanKind::OneR;
  CompositionAlgebra comp{};  // Magic only
  int p = 0, q = 0;           // Spin only: metric (+^{p-1}, -^{q-1})

  static JordanAlgebra magic(CompositionAlgebra a);
  static JordanAlgebra spin(int p, int q);
  static JordanAlgebra three_r() { return {JordanKind::ThreeR, {}, 0, 0}; }
  static JordanAlgebra two_r() { return {JordanKind::TwoR, {}, 0, 0}; }
  static JordanAlgebra one_r() { return {JordanKind::OneR, {}, 0, 0}; }

  int dim() const;
  int vec_dim() const { return p + q - 2; }
  // Metric sign of spin vector component i.
  int eta(int i) const { return i < p - 1 ? 1 : -1; }
  // Grammar: R | 2R | 3R | spin:p,q | magic:R|C|H|O|Cs|Hs|Os
  std::string name() const;
  static JordanAlgebra parse(const std::string& s);
  void validate() const;
  friend bool operator==(const JordanAlgebra&, const JordanAlgebra&) = default;
};

// Coefficient vector over the algebra's fixed basis.
// Magic: [alpha, beta, gamma, a, b, c] for [[alpha, c, conj b], [conj c, beta, a], [b, conj a, gamma]].
// Spin: [a, v_0 .. v_{p+q-3}].  ThreeR: [a1, a2, a3].  TwoR: [a, a0].  OneR: [a].
class JordanElement {
 public:
  JordanElement() = default;
  JordanElement(JordanAlgebra alg, Vec coeffs);
  static JordanElement zero(const JordanAlgebra& alg);
  static JordanElement basis(const JordanAlgebra& alg, int k);
  static JordanElement one(const JordanAlgebra& alg);
  static JordanElement magic(const JordanAlgebra& alg, const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                             const Vec& a, const Vec& b, const Vec& c);
  static JordanElement diag(const JordanAlgebra& magic_alg, const Scalar& x, const Scalar& y, const Scalar& z);
  static JordanElement spin(const JordanAlgebra& alg, const Scalar& a, const Vec& v);

  const JordanAlgebra& algebra() const { return alg_; }
  const Vec& coeffs() const { return c_; }
  int dim() const { return static_cast<int>(c_.size()); }
  const Scalar& operator[](int k) const { return c_[k]; }
  Scalar& operator[](int k) { return c_[k]; }

  // Magic accessors.
  CompositionElement off(int slot) const;  // slot 0 = a, 1 = b, 2 = c

  bool is_exact() const;
  Scalar scale() const;  // max |coefficient|, at least 1
  bool is_zero() const;

  friend JordanElement operator+(const JordanElement& x, const JordanElement& y);
  friend JordanElement operator-(const JordanElement& x, const JordanElement& y);
  friend JordanElement operator*(const Scalar& s, const JordanElement& x);
  JordanElement operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const JordanElement& x, const JordanElement& y);

 private:
  JordanAlgebra alg_;
  Vec c_;
};

std::ostream& operator<<(std::ostream& os, const JordanElement& x);

void require_same(const JordanElement& x, const JordanElement& y);

Scalar cubic_norm(const JordanElement& a);
// Symmetric trilinear form with N(A,A,A) = N(A), by polarization of the norm.
Scalar norm_trilinear(const JordanElement& a, const JordanElement& b, const JordanElement& c);
// Bilinear trace form Tr(A,B), closed form per family.
Scalar trace_form(const JordanElement& a, const JordanElement& b);
Scalar trace(const JordanElement& a);

struct DerivedMaps {
  Scalar trace_a;         // Tr(A)
  Scalar quad_a;          // S(A)
  Scalar bilinear_s;      // S(A,B)
  Scalar trace_bilinear;  // Tr(A,B)
};
DerivedMaps derived_maps(const JordanElement& a, const JordanElement& b);

JordanElement sharp(const JordanElement& a);
JordanElement cross(const JordanElement& a, const JordanElement& b);
// Adjoint solved from Tr(A#, B) = 3N(A,A,B) against the trace-form Gram matrix.
JordanElement sharp_by_definition(const JordanElement& a);
JordanElement jordan_product(const JordanElement& a, const JordanElement& b);
JordanElement triple_product(const JordanElement& a, const JordanElement& b, const JordanElement& c);

int rank(const JordanElement& a);
bool is_irreducible_idempotent(const JordanElement& e);

// Linear maps on the coefficient space.
using JordanOperator = Matrix;

JordanOperator vee(const JordanElement& a, const JordanElement& b);
JordanOperator left_mul(const JordanElement& a);
JordanElement apply(const JordanOperator& op, const JordanElement& a);
Matrix trace_gram(const JordanAlgebra& alg);
// Adjoint with respect to the trace form: Tr(op A, B) = Tr(A, adj B).
JordanOperator trace_adjoint(const JordanAlgebra& alg, const JordanOperator& op);

enum class SymmetryClass { Aut, Str0, Str, Der, Str0Lie, None };
struct SymmetryResult {
  SymmetryClass kind = SymmetryClass::None;
  Scalar lambda;  // norm factor for Str
};
SymmetryResult symmetry_membership(const JordanAlgebra& alg, const JordanOperator& op);
std::string to_string(SymmetryClass k);

JordanElement iso_spin_3r(const JordanElement& spin22);
JordanElement iso_3r_spin(const JordanElement& three_r);

}  // namespace freud
