#pragma once

#include <cstdint>
#include <random>

#include "freud/jordan.hpp"

namespace freud {

// The single seeded source of randomness; deterministic for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform_int(int lo, int hi);  // inclusive
  // Small rational num/den with |num| <= max_num, 1 <= den <= max_den.
  Scalar rational(int max_num = 5, int max_den = 3);
  Scalar nonzero_rational(int max_num = 5, int max_den = 3);
  Vec rational_vec(std::size_t n, int max_num = 5, int max_den = 3);
  JordanElement jordan(const JordanAlgebra& alg, int max_num = 5, int max_den = 3);
  // Random element with about half the coefficients zeroed.
  JordanElement sparse_jordan(const JordanAlgebra& alg);

 private:
  std::mt19937_64 eng_;
};

}  // namespace freud
