#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freud/fts.hpp"
#include "freud/transform.hpp"

namespace freud {

struct FtsOrbitLabel {
  JordanAlgebra family;
  std::string tag;                // x1, x2a, ..., x4c
  std::optional<Scalar> modulus;  // k > 0, rank 4 only
  int rank() const;
  friend bool operator==(const FtsOrbitLabel&, const FtsOrbitLabel&) = default;
};

struct FtsReduction {
  FtsOrbitLabel label;
  TransformationWord witness;
  FtsElement representative;
  Scalar residual;  // max |apply_word(witness, input) - representative|
};

struct AlphaForm {
  FtsElement reduced;  // (1, A, 0, beta)
  TransformationWord witness;
};

// Brings x != 0 to (1, A, 0, beta).
AlphaForm reduce_to_alpha_form(const FtsElement& x);

// Shift along E-frame axis k (1-based) of a reduced element with A diagonal in the frame:
// a_k -> a_k + beta c - a_i a_j c^2 / alpha, beta -> beta - 2 a_i a_j c / alpha.
// J_2R supports axis 1 only, with a_i = a_j = a0.
AlphaForm rank3_shift(const FtsElement& x, int axis, const Scalar& c);

// Z_2 then Z then tau = -id; exchanges the rank-2 spin classes A2c, A2d with x3b, x3a.
TransformationWord spin_gadget(const JordanAlgebra& alg);

FtsReduction canonical_form_f2n(const FtsElement& x);  // Spin(p,q), p, q >= 2
FtsReduction canonical_form_f2r(const FtsElement& x);
FtsReduction canonical_form_fr(const FtsElement& x);
// Dispatch on the family; magic and J_3R are not reducible.
FtsReduction canonical_form(const FtsElement& x);

// k = (|Delta| / 4)^(1/4).
Scalar rank4_modulus(const FtsElement& x);

std::vector<std::string> fts_tags(const JordanAlgebra& family);
FtsElement fts_representative(const FtsOrbitLabel& label);
FtsElement magic_fts_catalog(const JordanAlgebra& alg, const std::string& tag,
                             const std::optional<Scalar>& k = std::nullopt);

struct BFingerprint {
  int rank = 0;
  int delta_sign = 0;
  Inertia inertia;
  friend bool operator==(const BFingerprint&, const BFingerprint&) = default;
};
BFingerprint fingerprint(const FtsElement& x);

// Label from rank, sign of Delta and the B-form inertia. Where the invariants cannot separate
// the listed classes (Spin(2,2)) the reducer decides; magic families throw in that case.
FtsOrbitLabel orbit_label(const FtsElement& x);

}  // namespace freud
