#pragma once

#include <array>

#include "freud/fts.hpp"

namespace freud {

// a_{ABC}, stored in lexicographic (A, B, C) order.
struct Hypermatrix222 {
  std::array<Scalar, 8> a{};
  Scalar& operator()(int i, int j, int k) { return a[4 * i + 2 * j + k]; }
  const Scalar& operator()(int i, int j, int k) const { return a[4 * i + 2 * j + k]; }
  friend bool operator==(const Hypermatrix222&, const Hypermatrix222&) = default;
};

enum class SymMode {
  Partial,  // a_{A(B1 B2)}: symmetric in the last two slots, 6 entries
  Total,    // a_{(A1 A2 A3)}: 4 entries indexed by the number of 1s
};

// Partial: entries [A][k] flattened as 3A + k, k = number of 1s among B1, B2.
// Total: entries[k], k = number of 1s.
struct SymHypermatrix {
  SymMode mode = SymMode::Total;
  Vec entries;
  friend bool operator==(const SymHypermatrix&, const SymHypermatrix&) = default;
};

// alpha = a000, A = (a011, a101, a110), B = (a100, a010, a001), beta = a111.
Hypermatrix222 to_hypermatrix(const FtsElement& x);
FtsElement from_hypermatrix(const Hypermatrix222& a);

// Cayley's hyperdeterminant; Delta(x) = -hyperdet(to_hypermatrix(x)).
Scalar hyperdet(const Hypermatrix222& a);

using Mat2 = std::array<std::array<Scalar, 2>, 2>;
// a'_{ABC} = M_A^A' N_B^B' P_C^C' a_{A'B'C'}; each matrix must have determinant 1.
Hypermatrix222 act(const Mat2& m, const Mat2& n, const Mat2& p, const Hypermatrix222& a);
// Total: M on every slot. Partial: M on the first slot, N on the symmetric pair.
SymHypermatrix act_sym(const Mat2& m, const SymHypermatrix& s);
SymHypermatrix act_sym(const Mat2& m, const Mat2& n, const SymHypermatrix& s);
// Permute the three slots: result(i0, i1, i2) = a(i_{perm[0]}, i_{perm[1]}, i_{perm[2]}).
Hypermatrix222 permute(const Hypermatrix222& a, const std::array<int, 3>& perm);

SymHypermatrix symmetrize(const Hypermatrix222& a, SymMode mode);
Hypermatrix222 embed(const SymHypermatrix& s);

// F_2R elements map to partial and F_R elements to total symmetric cubes; Delta(x) = -hyperdet(embed(.)).
SymHypermatrix to_sym_hypermatrix(const FtsElement& x);
FtsElement from_sym_hypermatrix(const SymHypermatrix& s);

}  // namespace freud
