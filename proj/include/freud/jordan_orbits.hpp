#pragma once

#include <optional>
#include <string>

#include "freud/jordan.hpp"
#include "freud/random.hpp"

namespace freud {

enum class LightCone { Future, Past };
std::string to_string(LightCone c);

// Which group the spin classifier works with.
enum class OrbitMode {
  Full,               // SO(1,1) x SO(p-1,q-1)
  IdentityComponent,  // identity component of the orthogonal factor; adds future/past tags
};

struct JordanOrbitLabel {
  JordanAlgebra family;
  std::string tag;                     // A1a..A3b for spin, 1a..3b for magic
  std::optional<Scalar> modulus;       // rank 3 only
  std::optional<LightCone> component;  // identity-component mode only
  int rank() const;
  friend bool operator==(const JordanOrbitLabel&, const JordanOrbitLabel&) = default;
};

// Reduced structure group element of a spin factor: (a; v) -> (s^2 a; s^-1 L v), s > 0.
struct SpinStr0 {
  Scalar s{1};
  Matrix lorentz;
  static SpinStr0 identity(const JordanAlgebra& alg);
  SpinStr0 inverse() const;
};

JordanElement apply(const SpinStr0& g, const JordanElement& a);
// Random rational element; boosts and rotations only when identity_component is set.
SpinStr0 random_spin_str0(Rng& rng, const JordanAlgebra& alg, bool identity_component);
// L^T eta L == eta and det L == 1, with the tolerance of float entries.
bool is_special_orthogonal(const JordanAlgebra& alg, const Matrix& l);

struct JordanReduction {
  JordanOrbitLabel label;
  SpinStr0 witness;
  JordanElement representative;
  Scalar residual;  // max |witness(A) - representative|
};

// Orbit label from exact invariants. Needs Spin(p,q) with p, q >= 2.
JordanOrbitLabel spin_orbit_label(const JordanElement& a, OrbitMode mode = OrbitMode::Full);
JordanReduction spin_canonical_form(const JordanElement& a, OrbitMode mode = OrbitMode::Full);
JordanElement spin_representative(const JordanOrbitLabel& label);

// Diagonal representatives for magic families; k is required for rank 3.
JordanElement magic_rep_catalog(const JordanAlgebra& alg, const std::string& tag,
                                const std::optional<Scalar>& k = std::nullopt);

}  // namespace freud
