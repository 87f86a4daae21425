#pragma once

#include <ostream>
#include <vector>

#include "freud/jordan.hpp"
#include "freud/random.hpp"

namespace freud {

// x = (alpha, A, B, beta), the 2x2 layout [[alpha, A], [B, beta]].
// Flat coordinates: [alpha, beta, A..., B...].
struct FtsElement {
  Scalar alpha;
  JordanElement A;
  JordanElement B;
  Scalar beta;

  static FtsElement zero(const JordanAlgebra& alg);
  static FtsElement basis(const JordanAlgebra& alg, int k);
  static FtsElement from_flat(const JordanAlgebra& alg, const Vec& v);
  static int flat_dim(const JordanAlgebra& alg) { return 2 * alg.dim() + 2; }

  const JordanAlgebra& algebra() const { return A.algebra(); }
  Vec flat() const;
  bool is_exact() const;
  bool is_zero() const;
  Scalar scale() const;  // max |coefficient|, at least 1

  friend FtsElement operator+(const FtsElement& x, const FtsElement& y);
  friend FtsElement operator-(const FtsElement& x, const FtsElement& y);
  friend FtsElement operator*(const Scalar& s, const FtsElement& x);
  FtsElement operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const FtsElement& x, const FtsElement& y);
};

std::ostream& operator<<(std::ostream& os, const FtsElement& x);

void require_same(const FtsElement& x, const FtsElement& y);
FtsElement random_fts(Rng& rng, const JordanAlgebra& alg, int max_num = 5, int max_den = 3);

Scalar symplectic(const FtsElement& x, const FtsElement& y);
Scalar quartic_delta(const FtsElement& x);
// Full polarization with delta4(x,x,x,x) = quartic_delta(x).
Scalar delta4(const FtsElement& x, const FtsElement& y, const FtsElement& w, const FtsElement& z);
FtsElement triple(const FtsElement& x);
FtsElement triple3(const FtsElement& x, const FtsElement& y, const FtsElement& w);
// T(x, x, y), linear in y.
FtsElement triple_xxy(const FtsElement& x, const FtsElement& y);
// 3T(x,x,y) + {x,y}x.
FtsElement upsilon(const FtsElement& x, const FtsElement& y);

// Phi(phi, X, Y, nu), an element of the Lie algebra of Aut(F).
struct FtsOperator {
  JordanOperator phi;
  JordanElement X;
  JordanElement Y;
  Scalar nu;
};

FtsOperator wedge(const FtsElement& x, const FtsElement& y);
FtsElement apply_op(const FtsOperator& op, const FtsElement& z);
// (x ^ y) z without materializing the operator.
FtsElement wedge_apply(const FtsElement& x, const FtsElement& y, const FtsElement& z);
// Matrix of the operator on flat coordinates.
Matrix to_matrix(const JordanAlgebra& alg, const FtsOperator& op);
Matrix symplectic_gram(const JordanAlgebra& alg);

int rank(const FtsElement& x);
// Rank of (1, A, 0, beta) from the simplified conditions.
int rank_reduced(const FtsElement& x);

// B_y(x) = {(x ^ x) y, y}.
Scalar b_value(const FtsElement& y, const FtsElement& x);
// Gram matrix of B_y over flat coordinates.
Matrix b_form_matrix(const FtsElement& y);

struct AxiomReport {
  bool antisymmetric = false;
  bool nondegenerate = false;
  bool quartic_nonzero = false;
  int pairs_checked = 0;
  int pairs_failed = 0;
  bool ok() const { return antisymmetric && nondegenerate && quartic_nonzero && pairs_failed == 0; }
};
// Axioms 1-3 with q = 2 Delta on the given pairs.
AxiomReport verify_fts_axioms(const std::vector<std::pair<FtsElement, FtsElement>>& pairs);

enum class AutMembership { InGroup, InLie, None };
std::string to_string(AutMembership m);
// Exact checks on the basis plus deterministic random samples for the quartic conditions.
AutMembership aut_membership(const JordanAlgebra& alg, const Matrix& op);

}  // namespace freud
