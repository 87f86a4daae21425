#include "freud/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace freud {

BigFloat::BigFloat(int bits, int tol_log2) : bits_(bits), tol_log2_(tol_log2) {
  if (bits < 64) throw std::invalid_argument("BigFloat precision must be at least 64 bits");
  if (tol_log2 >= 0) throw std::invalid_argument("BigFloat tolerance must be below 1");
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, int bits, int tol_log2) : BigFloat(bits, tol_log2) {
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : bits_(o.bits_), tol_log2_(o.tol_log2_) {
  mpfr_init2(v_, bits_);
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : bits_(o.bits_), tol_log2_(o.tol_log2_) {
  mpfr_init2(v_, bits_);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    bits_ = o.bits_;
    tol_log2_ = o.tol_log2_;
    mpfr_set_prec(v_, bits_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    std::swap(bits_, o.bits_);
    std::swap(tol_log2_, o.tol_log2_);
    mpfr_swap(v_, o.v_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("non-finite BigFloat");
  if (mpfr_zero_p(v_)) return Rational(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rational r(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

std::string BigFloat::str() const {
  // Decimal digits enough to round-trip the binary precision.
  const std::size_t digits = static_cast<std::size_t>(bits_ * 0.30103) + 2;
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string out = "~";
  if (mpfr_zero_p(v_)) {
    out += "0e0";
  } else {
    bool neg = m[0] == '-';
    std::string d = neg ? m.substr(1) : m;
    while (d.size() > 1 && d.back() == '0') d.pop_back();
    if (neg) out += "-";
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
  }
  out += "@" + std::to_string(bits_);
  return out;
}

BigFloat BigFloat::parse(const std::string& s) {
  if (s.empty() || s[0] != '~') throw std::invalid_argument("bigfloat literal must start with '~'");
  auto at = s.find('@');
  int bits = 256;
  std::string body = s.substr(1, at == std::string::npos ? std::string::npos : at - 1);
  if (at != std::string::npos) bits = std::stoi(s.substr(at + 1));
  BigFloat f(bits, -(bits / 2));
  if (mpfr_set_str(f.v_, body.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("malformed bigfloat literal: " + s);
  }
  return f;
}

namespace {

BigFloat promote(const Scalar& s, int bits, int tol) {
  if (s.is_exact()) return BigFloat(s.rational(), bits, tol);
  BigFloat f(std::max(bits, s.bigfloat().bits()), std::max(tol, s.bigfloat().tol_log2()));
  mpfr_set(f.get(), s.bigfloat().get(), MPFR_RNDN);
  return f;
}

// Shared precision for a float operation on two operands.
std::pair<int, int> joint(const Scalar& a, const Scalar& b) {
  int bits = 64, tol = -1 << 30;
  bool any = false;
  for (const Scalar* s : {&a, &b}) {
    if (!s->is_exact()) {
      bits = std::max(bits, s->bigfloat().bits());
      tol = std::max(tol, s->bigfloat().tol_log2());
      any = true;
    }
  }
  if (!any) return {256, -128};
  return {bits, tol};
}

template <class Op>
Scalar float_op(const Scalar& a, const Scalar& b, Op op) {
  auto [bits, tol] = joint(a, b);
  BigFloat x = promote(a, bits, tol), y = promote(b, bits, tol), r(bits, tol);
  op(r.get(), x.get(), y.get(), MPFR_RNDN);
  return Scalar(r);
}

bool perfect_root(const mpz_class& z, unsigned n, mpz_class& out) {
  if (sgn(z) < 0) {
    if (n % 2 == 0) return false;
    mpz_class pos = -z;
    if (!mpz_root(out.get_mpz_t(), pos.get_mpz_t(), n)) return false;
    out = -out;
    return true;
  }
  return mpz_root(out.get_mpz_t(), z.get_mpz_t(), n) != 0;
}

Scalar nth_root(const Scalar& x, unsigned n, const Precision& p) {
  if (x.sign() < 0 && n % 2 == 0) throw std::domain_error("even root of a negative scalar");
  if (x.is_exact()) {
    mpz_class num, den;
    if (perfect_root(x.rational().get_num(), n, num) && perfect_root(x.rational().get_den(), n, den)) {
      Rational r(num, den);
      r.canonicalize();
      return Scalar(r);
    }
  }
  BigFloat f = promote(x, p.bits, p.tol_log2);
  BigFloat r(f.bits(), f.tol_log2());
  mpfr_rootn_ui(r.get(), f.get(), n, MPFR_RNDN);
  return Scalar(r);
}

}  // namespace

Scalar Scalar::frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

BigFloat Scalar::to_bigfloat(const Precision& p) const { return promote(*this, p.bits, p.tol_log2); }

double Scalar::to_double() const { return is_exact() ? rational().get_d() : bigfloat().to_double(); }

int Scalar::sign() const { return is_exact() ? sgn(rational()) : bigfloat().sign(); }

bool Scalar::is_zero(const Scalar& scale) const {
  if (is_exact()) return sgn(rational()) == 0;
  const BigFloat& f = bigfloat();
  if (mpfr_zero_p(f.get())) return true;
  BigFloat bound = promote(scale.abs(), f.bits(), f.tol_log2());
  if (mpfr_cmp_ui(bound.get(), 1) < 0) mpfr_set_ui(bound.get(), 1, MPFR_RNDN);
  mpfr_mul_2si(bound.get(), bound.get(), f.tol_log2(), MPFR_RNDN);
  return mpfr_cmpabs(f.get(), bound.get()) <= 0;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-rational()));
  BigFloat r = bigfloat();
  mpfr_neg(r.get(), r.get(), MPFR_RNDN);
  return Scalar(r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(v_) += o.rational();
  } else {
    *this = float_op(*this, o, mpfr_add);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(v_) -= o.rational();
  } else {
    *this = float_op(*this, o, mpfr_sub);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(v_) *= o.rational();
  } else {
    *this = float_op(*this, o, mpfr_mul);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_exact_zero()) throw std::domain_error("division by exact zero");
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(v_) /= o.rational();
  } else {
    *this = float_op(*this, o, mpfr_div);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return (a <=> b) == std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c;
  if (a.is_exact() && b.is_exact()) {
    c = cmp(a.rational(), b.rational());
  } else {
    auto [bits, tol] = joint(a, b);
    BigFloat x = promote(a, bits, tol), y = promote(b, bits, tol);
    c = mpfr_cmp(x.get(), y.get());
  }
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string Scalar::str() const {
  if (!is_exact()) return bigfloat().str();
  const Rational& q = rational();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::parse(const std::string& s) {
  if (!s.empty() && s[0] == '~') return Scalar(BigFloat::parse(s));
  Rational q;
  try {
    if (s.find_first_of(".eE") != std::string::npos) {
      // Decimal literal: read exactly as a rational.
      auto epos = s.find_first_of("eE");
      std::string mant = s.substr(0, epos);
      long exp10 = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
      auto dot = mant.find('.');
      std::string digits = mant;
      if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
      }
      mpz_class z(digits, 10), p10;
      mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
      q = exp10 < 0 ? Rational(z, p10) : Rational(z * p10);
    } else if (q.set_str(s, 10) != 0) {
      throw std::invalid_argument(s);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed scalar literal: " + s);
  }
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return Scalar(q);
}

Scalar pow(const Scalar& x, unsigned n) {
  Scalar r(1), b = x;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return r;
}

Scalar sqrt(const Scalar& x, const Precision& p) { return nth_root(x, 2, p); }
Scalar cbrt(const Scalar& x, const Precision& p) { return nth_root(x, 3, p); }
Scalar root4(const Scalar& x, const Precision& p) { return nth_root(x, 4, p); }

bool approx_equal(const Scalar& a, const Scalar& b, const Scalar& scale) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  Scalar s = scale.abs();
  for (const Scalar* v : {&a, &b}) {
    Scalar m = v->abs();
    if (m > s) s = m;
  }
  Scalar d = a - b;
  return d.is_zero(s);
}

Scalar max_abs(const Scalar* xs, std::size_t n) {
  Scalar m(0);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar a = xs[i].abs();
    if (a > m) m = a;
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace freud
