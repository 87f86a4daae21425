#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "freud/scalar.hpp"

namespace freud {

using Vec = std::vector<Scalar>;

// Small dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec column(std::size_t j) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  bool is_exact() const;
  bool is_symmetric() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Scalar determinant(const Matrix& m);
// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
// Solve m x = b; throws when singular.
Vec solve(const Matrix& m, const Vec& b);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester signature by symmetric congruence elimination.
Inertia inertia(const Matrix& s);

struct Root {
  Scalar value;
  int multiplicity;
};

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending; rational roots exact.
std::vector<Root> real_roots_cubic(const Scalar& c3, const Scalar& c2, const Scalar& c1, const Scalar& c0,
                                   const Precision& p = {});

// Horner evaluation of a polynomial with coefficients in ascending degree.
Scalar poly_eval(const Vec& coeffs_low_first, const Scalar& x);

}  // namespace freud
