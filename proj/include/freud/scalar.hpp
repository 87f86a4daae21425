#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

namespace freud {

using Rational = mpq_class;

// Working precision for radicals and the relative tolerance used for zero tests.
struct Precision {
  int bits = 256;
  int tol_log2 = -128;
};

class BigFloat {
 public:
  explicit BigFloat(int bits = 256, int tol_log2 = -128);
  BigFloat(const Rational& q, int bits, int tol_log2);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  int bits() const { return bits_; }
  int tol_log2() const { return tol_log2_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exact rational value of the binary float.
  Rational to_rational() const;
  std::string str() const;
  static BigFloat parse(const std::string& s);

 private:
  mpfr_t v_;
  int bits_;
  int tol_log2_;
  bool live_ = true;
};

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int v) : v_(Rational(v)) {}
  Scalar(long v) : v_(Rational(v)) {}
  Scalar(const Rational& q) : v_(q) {}
  Scalar(const BigFloat& f) : v_(f) {}
  static Scalar frac(long num, long den);

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const BigFloat& bigfloat() const { return std::get<BigFloat>(v_); }
  // Promote to a float with at least the given working precision.
  BigFloat to_bigfloat(const Precision& p = {}) const;
  double to_double() const;

  int sign() const;
  bool is_exact_zero() const { return is_exact() && sgn(rational()) == 0; }
  // Exact test for rationals; |x| <= 2^tol * scale for floats.
  bool is_zero(const Scalar& scale = Scalar(1)) const;
  int tol_log2() const { return is_exact() ? 0 : bigfloat().tol_log2(); }
  int bits() const { return is_exact() ? 0 : bigfloat().bits(); }

  Scalar abs() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Value comparison; mixed operands compare as floats.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  // "num/den" for rationals, "~mantissa e exp@bits" for floats.
  std::string str() const;
  static Scalar parse(const std::string& s);

 private:
  std::variant<Rational, BigFloat> v_;
};

Scalar pow(const Scalar& x, unsigned n);
// Radicals stay rational when the argument is a rational perfect power.
Scalar sqrt(const Scalar& x, const Precision& p = {});
Scalar cbrt(const Scalar& x, const Precision& p = {});
Scalar root4(const Scalar& x, const Precision& p = {});
// Relative closeness: |a-b| <= 2^tol * max(1, |a|, |b|, scale).
bool approx_equal(const Scalar& a, const Scalar& b, const Scalar& scale = Scalar(1));
// Max of |x_i| over a list, used as the scale for zero tests.
Scalar max_abs(const Scalar* xs, std::size_t n);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace freud
