#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "freud/fts.hpp"
#include "freud/jordan_orbits.hpp"
#include "freud/random.hpp"

namespace freud {

// (alpha, A, B, beta) -> (alpha + Tr(B,C) + Tr(A,C#) + beta N(C), A + beta C, B + A x C + beta C#, beta)
struct PhiMove {
  JordanElement C;
};

// (alpha, A, B, beta) -> (alpha, A + B x D + alpha D#, B + alpha D, beta + Tr(A,D) + Tr(B,D#) + alpha N(D))
struct PsiMove {
  JordanElement D;
};

// (alpha, A, B, beta) -> (alpha / lambda, tau A, tau^-t B, lambda beta) for tau in Str with N(tau A) = lambda N(A).
// Build through make_tau so the factor is validated and the dual inverse cached.
struct TauMove {
  JordanAlgebra alg;
  JordanOperator tau;
  Scalar lambda;
  JordanOperator dual_inverse;  // (tau^t)^-1 with respect to the trace form
};

// (alpha, A, B, beta) -> (-beta, -B, A, alpha)
struct ZeeMove {};

using FtsTransformation = std::variant<PhiMove, PsiMove, TauMove, ZeeMove>;
// Applied left to right.
using TransformationWord = std::vector<FtsTransformation>;

// Throws std::invalid_argument unless tau is in Str(J) with factor lambda.
TauMove make_tau(const JordanAlgebra& alg, const JordanOperator& tau, const Scalar& lambda);

FtsElement apply(const FtsTransformation& t, const FtsElement& x);
FtsElement apply_word(const TransformationWord& w, const FtsElement& x);
FtsTransformation invert(const FtsTransformation& t);
TransformationWord invert(const TransformationWord& w);
// w1 first, then w2.
TransformationWord compose(const TransformationWord& w1, const TransformationWord& w2);
// Matrix on flat FTS coordinates.
Matrix word_matrix(const JordanAlgebra& alg, const TransformationWord& w);
std::string move_name(const FtsTransformation& t);

// Random Str element with rational entries; factor returned in the TauMove.
TauMove random_tau(Rng& rng, const JordanAlgebra& alg);
TransformationWord random_word(Rng& rng, const JordanAlgebra& alg, int length);
TransformationWord random_word(const JordanAlgebra& alg, int length, std::uint64_t seed);

// Orthogonal frame of rank-1 idempotents summing to 1. Spin(p,q) needs p, q >= 2; J_2R and J_R have none.
std::array<JordanElement, 3> e_frame(const JordanAlgebra& alg);
// Z_k = Phi(-E_k) Psi(E_k) Phi(-E_k); with E = 1 this is Z itself.
TransformationWord zee_along(const JordanElement& e);

// tau = diag(d1, d2, d3) in the E-frame (spin: remaining vector components scaled by sqrt(d2 d3), so d2 d3 > 0).
// Spin and J_3R only; lambda = d1 d2 d3.
TauMove e_frame_scaling(const JordanAlgebra& alg, const Scalar& d1, const Scalar& d2, const Scalar& d3);
// A Str element with factor f and rational entries whenever f is rational.
TauMove str_with_factor(const JordanAlgebra& alg, const Scalar& f);
// X -> P X P^t on a magic algebra, P real 3x3; factor det(P)^2.
TauMove magic_congruence(const JordanAlgebra& alg, const Matrix& p);
// Spin Str0 element (a; v) -> (s^2 a; s^-1 L v) as a Jordan operator.
TauMove spin_str0_move(const JordanAlgebra& alg, const SpinStr0& g);

// Word for the SL(2) matrix [[a, b], [c, d]] (ad - bc = 1) acting on F_R.
TransformationWord sl2_word(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
// Diagonal SL(2) element diag(1/mu, mu) on F_R.
TauMove sl2_diag(const Scalar& mu);

}  // namespace freud
