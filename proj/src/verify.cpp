#include "freud/verify.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "freud/composition.hpp"
#include "freud/fts.hpp"
#include "freud/hypermatrix.hpp"
#include "freud/random.hpp"
#include "freud/transform.hpp"

namespace freud {

namespace {

constexpr std::size_t kMaxNotes = 5;

SuiteResult named(std::string name) {
  SuiteResult r;
  r.suite = std::move(name);
  return r;
}

void check(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (ok) return;
  ++r.failures;
  if (r.first_failures.size() < kMaxNotes) r.first_failures.push_back(what);
}

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Mat2 random_sl2(Rng& rng) {
  const Scalar a = rng.nonzero_rational(3, 2), b = rng.rational(3, 2), c = rng.rational(3, 2);
  return Mat2{{{a, b}, {c, (Scalar(1) + b * c) / a}}};
}

}  // namespace

std::vector<JordanAlgebra> jordan_test_families() {
  std::vector<JordanAlgebra> f;
  for (auto n : {"R", "C", "H", "O", "Cs", "Hs", "Os"}) f.push_back(JordanAlgebra::magic(CompositionAlgebra::from_name(n)));
  for (int n = 2; n <= 6; ++n) f.push_back(JordanAlgebra::spin(2, n));
  f.push_back(JordanAlgebra::spin(6, 2));
  f.push_back(JordanAlgebra::three_r());
  f.push_back(JordanAlgebra::two_r());
  f.push_back(JordanAlgebra::one_r());
  return f;
}

std::vector<JordanAlgebra> fts_test_families() { return jordan_test_families(); }

SuiteResult suite_adjoint_identity(std::uint64_t seed, int count) {
  SuiteResult r = named("adjoint-identity");
  Rng rng(seed);
  for (const auto& j : jordan_test_families()) {
    for (int t = 0; t < count; ++t) {
      const JordanElement a = rng.jordan(j);
      check(r, sharp(sharp(a)) == cubic_norm(a) * a, j.name() + " " + show(a));
    }
  }
  return r;
}

SuiteResult suite_trace_relations(std::uint64_t seed, int count) {
  SuiteResult r = named("trace-relations");
  Rng rng(seed);
  for (const auto& j : jordan_test_families()) {
    check(r, !determinant(trace_gram(j)).is_zero(), j.name() + " degenerate trace form");
    for (int t = 0; t < count; ++t) {
      const JordanElement a = rng.jordan(j), b = rng.jordan(j);
      check(r, trace_form(sharp(a), b) == Scalar(3) * norm_trilinear(a, a, b), j.name() + " " + show(a));
    }
  }
  return r;
}

SuiteResult suite_composition(std::uint64_t seed, int count) {
  SuiteResult r = named("composition");
  Rng rng(seed);
  for (auto n : {"R", "C", "H", "O", "Cs", "Hs", "Os"}) {
    const CompositionAlgebra a = CompositionAlgebra::from_name(n);
    for (int t = 0; t < count; ++t) {
      const CompositionElement x(a, rng.rational_vec(a.dim)), y(a, rng.rational_vec(a.dim));
      check(r, (x * y).quad_norm() == x.quad_norm() * y.quad_norm(), std::string(n) + " norm");
      check(r, (x * x) * y == x * (x * y), std::string(n) + " left alternative");
      check(r, (y * x) * x == y * (x * x), std::string(n) + " right alternative");
    }
  }
  return r;
}

SuiteResult suite_brown_axioms(std::uint64_t seed, int count) {
  SuiteResult r = named("brown-axioms");
  Rng rng(seed);
  for (const auto& j : fts_test_families()) {
    std::vector<std::pair<FtsElement, FtsElement>> pairs;
    for (int t = 0; t < count; ++t) pairs.emplace_back(random_fts(rng, j), random_fts(rng, j));
    const AxiomReport a = verify_fts_axioms(pairs);
    check(r, a.antisymmetric && a.nondegenerate && a.quartic_nonzero, j.name() + " form axioms");
    r.checks += a.pairs_checked;
    r.failures += a.pairs_failed;
    if (a.pairs_failed > 0 && r.first_failures.size() < kMaxNotes) r.first_failures.push_back(j.name() + " axiom 3");
  }
  return r;
}

SuiteResult suite_yokota_identities(std::uint64_t seed, int count) {
  SuiteResult r = named("yokota-identities");
  Rng rng(seed);
  const Scalar c = Scalar::frac(3, 4);
  for (const auto& j : fts_test_families()) {
    for (int t = 0; t < count; ++t) {
      const FtsElement x = random_fts(rng, j), y = random_fts(rng, j), z = random_fts(rng, j);
      const std::string tag = j.name() + " #" + std::to_string(t);
      check(r, (wedge_apply(x, y, x) - wedge_apply(x, x, y) + c * symplectic(x, y) * x).is_zero(), tag + " first");
      check(r,
            (Scalar(2) * wedge_apply(x, y, z) - wedge_apply(x, z, y) - wedge_apply(y, z, x) +
             c * symplectic(z, y) * x - c * symplectic(x, z) * y)
                .is_zero(),
            tag + " second");
      check(r,
            (Scalar::frac(-9, 2) * triple3(x, y, z) + Scalar(3) * wedge_apply(x, y, z) + c * symplectic(z, y) * x -
             c * symplectic(x, z) * y)
                .is_zero(),
            tag + " third");
    }
  }
  return r;
}

SuiteResult suite_automorphisms(std::uint64_t seed, int count) {
  SuiteResult r = named("automorphisms");
  Rng rng(seed);
  for (const auto& j : fts_test_families()) {
    for (int t = 0; t < count; ++t) {
      const TransformationWord w = random_word(rng, j, 1 + t % 8);
      const FtsElement x = random_fts(rng, j), y = random_fts(rng, j);
      const FtsElement wx = apply_word(w, x), wy = apply_word(w, y);
      const std::string tag = j.name() + " word #" + std::to_string(t);
      check(r, quartic_delta(wx) == quartic_delta(x), tag + " Delta");
      check(r, symplectic(wx, wy) == symplectic(x, y), tag + " form");
      check(r, rank(wx) == rank(x), tag + " rank");
    }
  }
  return r;
}

SuiteResult suite_hyperdet(std::uint64_t seed, int count) {
  SuiteResult r = named("hyperdet");
  Rng rng(seed);
  const JordanAlgebra r3 = JordanAlgebra::three_r();
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int t = 0; t < count; ++t) {
    const FtsElement x = random_fts(rng, r3);
    const Hypermatrix222 h = to_hypermatrix(x);
    const Scalar d = hyperdet(h);
    check(r, d == -quartic_delta(x), "Delta vs Det " + show(x));
    check(r, hyperdet(act(random_sl2(rng), random_sl2(rng), random_sl2(rng), h)) == d, "SL2^3 " + show(x));
    check(r, hyperdet(permute(h, perms[t % 6])) == d, "permutation " + show(x));
  }
  return r;
}

SuiteResult suite_fr_rank(std::uint64_t seed, int count) {
  SuiteResult r = named("fr-rank");
  Rng rng(seed);
  const JordanAlgebra one = JordanAlgebra::one_r();
  auto examine = [&](const FtsElement& x) {
    if (x.is_zero()) return;
    check(r, rank(x) != 2, "rank 2 at " + show(x));
    if (!triple(x).is_zero()) return;
    bool vanishes = true;
    for (int k = 0; k < FtsElement::flat_dim(one); ++k) vanishes = vanishes && upsilon(x, FtsElement::basis(one, k)).is_zero();
    check(r, vanishes, "T = 0 but Upsilon != 0 at " + show(x));
  };
  for (int t = 0; t < count; ++t) examine(random_fts(rng, one));
  // Reduced forms (1, A, 0, beta) on a grid, including the rank-3 locus beta = +-2 s^3, A = -s^2.
  const JordanElement zero = JordanElement::zero(one);
  for (int a = -4; a <= 4; ++a) {
    for (int b = -16; b <= 16; ++b) examine({1, JordanElement(one, {a}), zero, b});
  }
  for (int s = 1; s <= 4; ++s) {
    for (int sgn : {-1, 1}) examine({1, JordanElement(one, {-s * s}), zero, 2 * sgn * s * s * s});
  }
  // Orbits of the low-rank representatives.
  const FtsElement x1{1, zero, zero, 0}, x3{0, JordanElement(one, {1}), zero, 0};
  for (int t = 0; t < count / 10; ++t) {
    examine(apply_word(random_word(rng, one, 5), x1));
    examine(apply_word(random_word(rng, one, 5), x3));
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"adjoint-identity", "trace-relations", "composition", "brown-axioms",
          "yokota-identities", "automorphisms",   "hyperdet",    "fr-rank"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count) {
  using Fn = std::function<SuiteResult(std::uint64_t, int)>;
  static const std::map<std::string, std::pair<Fn, int>> suites{
      {"adjoint-identity", {suite_adjoint_identity, 50}},
      {"trace-relations", {suite_trace_relations, 20}},
      {"composition", {suite_composition, 100}},
      {"brown-axioms", {suite_brown_axioms, 5}},
      {"yokota-identities", {suite_yokota_identities, 3}},
      {"automorphisms", {suite_automorphisms, 10}},
      {"hyperdet", {suite_hyperdet, 100}},
      {"fr-rank", {suite_fr_rank, 500}},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second.first(seed, count > 0 ? count : it->second.second);
}

}  // namespace freud
