#pragma once

#include <string>

#include "freud/numerics.hpp"

namespace freud {

struct CompositionAlgebra {
  int dim = 1;
  bool split = false;

  // Throws for anything outside R, C, H, O and their split forms.
  void validate() const;
  std::string name() const;  // "R", "C", "H", "O", "Cs", "Hs", "Os"
  static CompositionAlgebra from_name(const std::string& n);
  friend bool operator==(const CompositionAlgebra&, const CompositionAlgebra&) = default;
};

// Basis product e_i e_j = sign * e_index.
struct BasisProduct {
  int sign;
  int index;
};
BasisProduct basis_product(const CompositionAlgebra& alg, int i, int j);

// Raw kernels on coefficient arrays of length alg.dim.
void comp_mul(const CompositionAlgebra& alg, const Scalar* x, const Scalar* y, Scalar* out);
// Re(x conj(y)), the polarized norm.
Scalar comp_inner(const CompositionAlgebra& alg, const Scalar* x, const Scalar* y);

class CompositionElement {
 public:
  CompositionElement(CompositionAlgebra alg, Vec coeffs);
  static CompositionElement zero(CompositionAlgebra alg);
  static CompositionElement unit(CompositionAlgebra alg, int k);

  const CompositionAlgebra& algebra() const { return alg_; }
  const Vec& coeffs() const { return c_; }
  const Scalar& operator[](int k) const { return c_[k]; }

  CompositionElement conj() const;
  Scalar re() const { return c_[0]; }
  Scalar quad_norm() const;

  friend CompositionElement operator*(const CompositionElement& x, const CompositionElement& y);
  friend CompositionElement operator+(const CompositionElement& x, const CompositionElement& y);
  friend CompositionElement operator-(const CompositionElement& x, const CompositionElement& y);
  friend CompositionElement operator*(const Scalar& s, const CompositionElement& x);
  friend bool operator==(const CompositionElement& x, const CompositionElement& y);

 private:
  CompositionAlgebra alg_;
  Vec c_;
};

CompositionElement mul(const CompositionElement& x, const CompositionElement& y);

}  // namespace freud
