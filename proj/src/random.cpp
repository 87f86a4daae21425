#include "freud/random.hpp"

namespace freud {

int Rng::uniform_int(int lo, int hi) {
  // Explicit modular draw keeps sequences identical across standard libraries.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(eng_() % span);
}

Scalar Rng::rational(int max_num, int max_den) {
  int num = uniform_int(-max_num, max_num);
  int den = uniform_int(1, max_den);
  return Scalar::frac(num, den);
}

Scalar Rng::nonzero_rational(int max_num, int max_den) {
  for (;;) {
    Scalar s = rational(max_num, max_den);
    if (!s.is_exact_zero()) return s;
  }
}

Vec Rng::rational_vec(std::size_t n, int max_num, int max_den) {
  Vec v(n);
  for (auto& x : v) x = rational(max_num, max_den);
  return v;
}

JordanElement Rng::jordan(const JordanAlgebra& alg, int max_num, int max_den) {
  return {alg, rational_vec(static_cast<std::size_t>(alg.dim()), max_num, max_den)};
}

JordanElement Rng::sparse_jordan(const JordanAlgebra& alg) {
  Vec v(static_cast<std::size_t>(alg.dim()));
  for (auto& x : v)
    if (uniform_int(0, 1)) x = rational();
  return {alg, v};
}

}  // namespace freud
