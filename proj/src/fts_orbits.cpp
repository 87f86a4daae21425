#include "freud/fts_orbits.hpp"

#include <stdexcept>

namespace freud {

namespace {

bool is_spin_classifiable(const JordanAlgebra& j) { return j.kind == JordanKind::Spin && j.p >= 2 && j.q >= 2; }

void push(FtsElement& cur, TransformationWord& w, const FtsTransformation& t) {
  cur = freud::apply(t, cur);
  w.push_back(t);
}

void push_all(FtsElement& cur, TransformationWord& w, const TransformationWord& more) {
  for (const auto& t : more) push(cur, w, t);
}

void require_nonzero(const FtsElement& x) {
  if (x.is_zero()) throw std::invalid_argument("the zero element has no orbit");
}

Scalar max_diff(const FtsElement& x, const FtsElement& y) {
  const Vec d = (x - y).flat();
  return max_abs(d.data(), d.size());
}

FtsReduction finish(const FtsElement& input, FtsOrbitLabel label, TransformationWord w) {
  FtsReduction r;
  r.representative = fts_representative(label);
  r.residual = max_diff(apply_word(w, input), r.representative);
  r.label = std::move(label);
  r.witness = std::move(w);
  return r;
}

// Coordinates of a frame-diagonal element; throws if A has an off-frame part.
std::array<Scalar, 3> frame_coords(const JordanElement& a) {
  const auto e = e_frame(a.algebra());
  std::array<Scalar, 3> c;
  JordanElement back = JordanElement::zero(a.algebra());
  for (int i = 0; i < 3; ++i) {
    c[i] = trace_form(a, e[i]);
    back = back + c[i] * e[i];
  }
  const Vec d = (a - back).coeffs();
  for (const Scalar& x : d) {
    if (!x.is_zero(a.scale())) throw std::invalid_argument("element is not diagonal in the E-frame");
  }
  return c;
}

// Reduce A by a spin Str0 element (lambda = 1, so alpha, B = 0 and beta are kept).
JordanOrbitLabel spin_step(FtsElement& cur, TransformationWord& w) {
  const JordanReduction r = spin_canonical_form(cur.A, OrbitMode::Full);
  push(cur, w, spin_str0_move(cur.algebra(), r.witness));
  return r.label;
}

void realpha(FtsElement& cur, TransformationWord& w) {
  const AlphaForm a = reduce_to_alpha_form(cur);
  cur = a.reduced;
  w.insert(w.end(), a.witness.begin(), a.witness.end());
}

void shift(FtsElement& cur, TransformationWord& w, int axis, const Scalar& c) {
  const AlphaForm s = rank3_shift(cur, axis, c);
  cur = s.reduced;
  w.insert(w.end(), s.witness.begin(), s.witness.end());
}

// Uses frame shifts to make beta = 0; A must be frame-diagonal.
void kill_beta(FtsElement& cur, TransformationWord& w) {
  for (int guard = 0; guard < 4 && !cur.beta.is_zero(cur.scale()); ++guard) {
    const auto a = frame_coords(cur.A);
    int zero_axis = -1;
    for (int k = 0; k < 3; ++k) {
      const Scalar pair = a[(k + 1) % 3] * a[(k + 2) % 3];
      if (!pair.is_zero(cur.scale() * cur.scale())) {
        shift(cur, w, k + 1, cur.beta * cur.alpha / (Scalar(2) * pair));
        return;
      }
      if (a[k].is_zero(cur.scale())) zero_axis = k;
    }
    shift(cur, w, zero_axis + 1, Scalar(1));
  }
  if (!cur.beta.is_zero(cur.scale())) throw std::logic_error("frame shifts failed to clear beta");
}

Scalar pick_root(const std::vector<Root>& roots) {
  if (roots.empty()) throw std::logic_error("cubic without a real root");
  for (const Root& r : roots) {
    if (r.value.is_exact()) return r.value;
  }
  return roots.front().value;
}

// Modified path for algebras not spanned by rank-1 elements.
AlphaForm reduce_modified(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  FtsElement cur = x;
  TransformationWord w;
  const Scalar s = x.scale();
  if (!cur.alpha.is_zero(s)) {
    push(cur, w, ZeeMove{});
  } else if (cur.beta.is_zero(s)) {
    // beta' = t Tr(A, U) + t^2 Tr(B, U#) for psi(t U).
    std::vector<JordanElement> probes{JordanElement::one(j)};
    for (int k = 0; k < j.dim(); ++k) probes.push_back(JordanElement::basis(j, k));
    bool done = false;
    for (const auto& u : probes) {
      for (int t = 1; t <= 2 && !done; ++t) {
        const FtsElement y = freud::apply(PsiMove{Scalar(t) * u}, cur);
        if (!y.beta.is_zero(s)) {
          push(cur, w, PsiMove{Scalar(t) * u});
          done = true;
        }
      }
      if (done) break;
    }
    if (!done) throw std::logic_error("could not make beta nonzero");
  }
  // alpha' = beta t^3 + Tr(A) t^2 + Tr(B) t + alpha for phi(t 1); solve alpha' = 1.
  const Scalar t = pick_root(real_roots_cubic(cur.beta, trace(cur.A), trace(cur.B), cur.alpha - Scalar(1)));
  push(cur, w, PhiMove{t * JordanElement::one(j)});
  if (!cur.B.is_zero()) push(cur, w, PsiMove{-cur.B});
  return {cur, w};
}

FtsElement spin_fts(const JordanAlgebra& j, const Scalar& a, const Scalar& t0, const Scalar& t1) {
  Vec v(j.vec_dim());
  v[0] = t0;
  v[j.p - 1] = t1;
  return {Scalar(1), JordanElement::spin(j, a, v), JordanElement::zero(j), Scalar(0)};
}

FtsElement reduced(const JordanAlgebra& j, const Vec& a) {
  return {Scalar(1), JordanElement(j, a), JordanElement::zero(j), Scalar(0)};
}

}  // namespace

int FtsOrbitLabel::rank() const {
  if (tag.size() < 2) throw std::invalid_argument("bad FTS tag");
  return tag[1] - '0';
}

AlphaForm reduce_to_alpha_form(const FtsElement& x) {
  require_nonzero(x);
  const JordanAlgebra& j = x.algebra();
  if ((x.alpha - Scalar(1)).is_zero(x.scale()) && x.B.is_zero()) return {x, {}};
  if (j.kind == JordanKind::TwoR || j.kind == JordanKind::OneR) return reduce_modified(x);

  FtsElement cur = x;
  TransformationWord w;
  const Scalar s = x.scale();
  if (cur.alpha.is_zero(s)) {
    if (!cur.beta.is_zero(s)) {
      push(cur, w, ZeeMove{});
    } else {
      if (cur.B.is_zero()) push(cur, w, ZeeMove{});
      // alpha' = t Tr(B, E) + t^2 Tr(A, E#) for phi(t E).
      bool done = false;
      for (int k = 0; k < j.dim() && !done; ++k) {
        for (int t = 1; t <= 3 && !done; ++t) {
          const PhiMove m{Scalar(t) * JordanElement::basis(j, k)};
          if (!freud::apply(m, cur).alpha.is_zero(s)) {
            push(cur, w, m);
            done = true;
          }
        }
      }
      if (!done) throw std::logic_error("could not make alpha nonzero");
    }
  }
  if (!(cur.alpha - Scalar(1)).is_zero(s)) push(cur, w, str_with_factor(j, cur.alpha));
  if (!cur.B.is_zero()) push(cur, w, PsiMove{-(Scalar(1) / cur.alpha) * cur.B});
  return {cur, w};
}

AlphaForm rank3_shift(const FtsElement& x, int axis, const Scalar& c) {
  const JordanAlgebra& j = x.algebra();
  if (x.alpha.is_zero(x.scale())) throw std::invalid_argument("shift needs alpha != 0");
  TransformationWord w;
  if (j.kind == JordanKind::TwoR) {
    if (axis != 1) throw std::invalid_argument("J_2R supports the shift along axis 1 only");
    const JordanElement e1(j, {1, 0}), e23(j, {0, 1});
    w = {PhiMove{c * e1}, PsiMove{-(c * x.A[1] / x.alpha) * e23}};
  } else {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
    const auto e = e_frame(j);
    const auto a = frame_coords(x.A);
    const int k = axis - 1, i = (k + 1) % 3, l = (k + 2) % 3;
    w = {PhiMove{c * e[k]}, PsiMove{-(c / x.alpha) * (a[l] * e[i] + a[i] * e[l])}};
  }
  return {apply_word(w, x), w};
}

TransformationWord spin_gadget(const JordanAlgebra& alg) {
  TransformationWord w = zee_along(e_frame(alg)[1]);
  w.push_back(ZeeMove{});
  w.push_back(make_tau(alg, Scalar(-1) * Matrix::identity(alg.dim()), Scalar(-1)));
  return w;
}

Scalar rank4_modulus(const FtsElement& x) { return root4(quartic_delta(x).abs() / Scalar(4)); }

FtsReduction canonical_form_f2n(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  if (!is_spin_classifiable(j)) throw std::invalid_argument("canonical_form_f2n needs Spin(p,q) with p, q >= 2");
  require_nonzero(x);
  const int r = rank(x);
  AlphaForm start = reduce_to_alpha_form(x);
  FtsElement cur = start.reduced;
  TransformationWord w = start.witness;
  FtsOrbitLabel label{j, "", std::nullopt};

  if (r == 1) {
    label.tag = "x1";
  } else if (r == 2) {
    const std::string t = spin_step(cur, w).tag;
    label.tag = t == "A1a" ? "x2a" : t == "A1b" ? "x2b" : "x2c";
  } else if (r == 3) {
    if (!cur.beta.is_zero(cur.scale())) {
      spin_step(cur, w);
      kill_beta(cur, w);
    }
    std::string t = spin_step(cur, w).tag;
    if (t == "A2c" || t == "A2d") {
      push_all(cur, w, spin_gadget(j));
      realpha(cur, w);
      t = spin_step(cur, w).tag;
    }
    if (t != "A2a" && t != "A2b") throw std::logic_error("rank-3 reduction did not reach a null form");
    label.tag = t == "A2a" ? "x3a" : "x3b";
  } else {
    if (!cur.beta.is_zero(cur.scale())) {
      if (!cur.A.is_zero()) spin_step(cur, w);
      kill_beta(cur, w);
    }
    std::string t = spin_step(cur, w).tag;
    const Scalar n = cubic_norm(cur.A);
    if (n.sign() > 0 && t == "A3a") {
      push_all(cur, w, spin_gadget(j));
      realpha(cur, w);
      t = spin_step(cur, w).tag;
    }
    const auto a = frame_coords(cur.A);
    std::array<int, 3> target;
    if (n.sign() > 0) {
      label.tag = "x4c", target = {-1, 1, -1};
    } else if (t == "A3a") {
      label.tag = "x4b", target = {1, 1, -1};
    } else {
      label.tag = "x4a", target = {-1, 1, 1};
    }
    const Scalar k = rank4_modulus(x);
    label.modulus = k;
    push(cur, w,
         e_frame_scaling(j, k * Scalar(target[0]) / a[0], k * Scalar(target[1]) / a[1],
                         k * Scalar(target[2]) / a[2]));
  }
  return finish(x, label, w);
}

FtsReduction canonical_form_f2r(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  if (j.kind != JordanKind::TwoR) throw std::invalid_argument("canonical_form_f2r needs a J_2R element");
  require_nonzero(x);
  const int r = rank(x);
  AlphaForm start = reduce_to_alpha_form(x);
  FtsElement cur = start.reduced;
  TransformationWord w = start.witness;
  FtsOrbitLabel label{j, "", std::nullopt};
  auto scale_move = [&](const Scalar& r1, const Scalar& r2) {
    Matrix m(2, 2);
    m(0, 0) = r1, m(1, 1) = r2;
    return make_tau(j, m, r1 * r2 * r2);
  };

  if (r == 1) {
    label.tag = "x1";
  } else if (r == 2) {
    const Scalar a = cur.A[0];
    push(cur, w, scale_move(Scalar(1) / a.abs(), sqrt(a.abs())));
    label.tag = a.sign() > 0 ? "x2a" : "x2b";
  } else if (r == 3) {
    if (!cur.beta.is_zero(cur.scale())) {
      shift(cur, w, 1, cur.beta / (Scalar(2) * cur.A[1] * cur.A[1]));
    }
    const Scalar a0 = cur.A[1];
    push(cur, w, scale_move(a0 * a0, Scalar(1) / a0));
    label.tag = "x3a";
  } else {
    for (int t = 1; t <= 3 && !cur.beta.is_zero(cur.scale()) && cur.A[1].is_zero(cur.scale()); ++t) {
      FtsElement trial = cur;
      TransformationWord tw = w;
      push(trial, tw, PhiMove{JordanElement(j, {0, t})});
      realpha(trial, tw);
      if (!trial.A[1].is_zero(trial.scale())) cur = trial, w = tw;
    }
    if (!cur.beta.is_zero(cur.scale())) {
      if (cur.A[1].is_zero(cur.scale())) throw std::logic_error("could not make a0 nonzero");
      shift(cur, w, 1, cur.beta / (Scalar(2) * cur.A[1] * cur.A[1]));
    }
    const Scalar n = cubic_norm(cur.A);
    const Scalar eps(n.sign() > 0 ? 1 : -1);
    const Scalar k = rank4_modulus(x);
    label.tag = n.sign() > 0 ? "x4b" : "x4a";
    label.modulus = k;
    push(cur, w, scale_move(k * eps / cur.A[0], k / cur.A[1]));
  }
  return finish(x, label, w);
}

FtsReduction canonical_form_fr(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  if (j.kind != JordanKind::OneR) throw std::invalid_argument("canonical_form_fr needs a J_R element");
  require_nonzero(x);
  const int r = rank(x);
  AlphaForm start = reduce_to_alpha_form(x);
  FtsElement cur = start.reduced;
  TransformationWord w = start.witness;
  FtsOrbitLabel label{j, "", std::nullopt};
  auto sl2 = [&](const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    push_all(cur, w, sl2_word(a, b, c, d));
  };

  if (r == 1) {
    label.tag = "x1";
  } else if (r == 3) {
    // beta = 2 r |A| with r^2 = |A|.
    const Scalar rr = cur.beta / (Scalar(2) * cur.A[0].abs());
    sl2(Scalar::frac(1, 3), Scalar(1) / (Scalar(3) * rr), Scalar(-2) * rr, Scalar(1));
    push(cur, w, sl2_diag(Scalar(1) / cur.A[0]));
    label.tag = "x3";
  } else if (r == 4) {
    const Scalar a = cur.A[0], b = cur.beta;
    const Scalar s = cur.scale();
    if (!b.is_zero(s)) {
      // gamma solves gamma^3 + 3 A gamma + beta = 0 with A^2 - gamma (A gamma + beta) >= 0.
      std::vector<Root> roots = real_roots_cubic(1, 0, Scalar(3) * a, b);
      std::optional<Scalar> gamma;
      for (int pass = 0; pass < 2 && !gamma; ++pass) {
        for (const Root& rt : roots) {
          const Scalar disc = a * a - rt.value * (a * rt.value + b);
          if (disc.sign() < 0 && !disc.is_zero(s * s)) continue;
          if (pass == 0 && !rt.value.is_exact()) continue;
          if (!gamma || rt.value.abs() > gamma->abs()) gamma = rt.value;
        }
      }
      if (!gamma) throw std::logic_error("no admissible root for the rank-4 reduction");
      const Scalar g = *gamma;
      Scalar disc = a * a - g * (a * g + b);
      if (disc.sign() < 0) disc = Scalar(0);
      const Scalar root = sqrt(disc);
      Scalar xi = (-a + root) / g;
      if ((xi - g).is_zero(s)) xi = (-a - root) / g;
      sl2(xi / (xi - g), Scalar(1) / (xi - g), g, Scalar(1));
    }
    // Now (alpha~, A~, 0, 0); diag(1/mu, mu) with mu = k eps / A~.
    const Scalar at = cur.alpha, aa = cur.A[0];
    const int eps = (at * aa).sign() > 0 ? 1 : -1;
    const Scalar k = rank4_modulus(x);
    push(cur, w, sl2_diag(k * Scalar(eps) / aa));
    label.tag = eps > 0 ? "x4b" : "x4a";
    label.modulus = k;
  } else {
    throw std::logic_error("J_R has no rank-2 elements");
  }
  return finish(x, label, w);
}

FtsReduction canonical_form(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  if (is_spin_classifiable(j)) return canonical_form_f2n(x);
  if (j.kind == JordanKind::TwoR) return canonical_form_f2r(x);
  if (j.kind == JordanKind::OneR) return canonical_form_fr(x);
  throw std::invalid_argument("no constructive reduction for " + j.name());
}

std::vector<std::string> fts_tags(const JordanAlgebra& j) {
  if (is_spin_classifiable(j)) return {"x1", "x2a", "x2b", "x2c", "x3a", "x3b", "x4a", "x4b", "x4c"};
  switch (j.kind) {
    case JordanKind::Magic: return {"x1", "x2a", "x2b", "x3a", "x3b", "x4a", "x4b", "x4c"};
    case JordanKind::TwoR: return {"x1", "x2a", "x2b", "x3a", "x4a", "x4b"};
    case JordanKind::OneR: return {"x1", "x3", "x4a", "x4b"};
    default: break;
  }
  throw std::invalid_argument("no canonical forms listed for " + j.name());
}

FtsElement magic_fts_catalog(const JordanAlgebra& alg, const std::string& tag, const std::optional<Scalar>& k) {
  if (alg.kind != JordanKind::Magic) throw std::invalid_argument("catalog needs a magic algebra");
  return fts_representative({alg, tag, k});
}

FtsElement fts_representative(const FtsOrbitLabel& label) {
  const JordanAlgebra& j = label.family;
  const std::string& t = label.tag;
  const auto tags = fts_tags(j);
  if (std::find(tags.begin(), tags.end(), t) == tags.end()) throw std::invalid_argument("unknown tag " + t + " for " + j.name());
  const bool rank4 = t[1] == '4';
  if (rank4 && (!label.modulus || label.modulus->sign() <= 0)) throw std::invalid_argument("rank-4 tag needs k > 0");
  if (t == "x1") return reduced(j, Vec(j.dim()));
  const Scalar h = Scalar::frac(1, 2);
  FtsElement r;
  if (is_spin_classifiable(j)) {
    if (t == "x2a") r = spin_fts(j, 1, 0, 0);
    else if (t == "x2b") r = spin_fts(j, -1, 0, 0);
    else if (t == "x2c") r = spin_fts(j, 0, h, h);
    else if (t == "x3a") r = spin_fts(j, 0, 1, 0);
    else if (t == "x3b") r = spin_fts(j, 0, 0, 1);
    else if (t == "x4a") r = spin_fts(j, -1, 1, 0);
    else if (t == "x4b") r = spin_fts(j, 1, 0, 1);
    else r = spin_fts(j, -1, 0, 1);
  } else if (j.kind == JordanKind::Magic) {
    auto diag = [&](int x, int y, int z) {
      return FtsElement{1, JordanElement::diag(j, x, y, z), JordanElement::zero(j), 0};
    };
    if (t == "x2a") r = diag(1, 0, 0);
    else if (t == "x2b") r = diag(-1, 0, 0);
    else if (t == "x3a") r = diag(1, 1, 0);
    else if (t == "x3b") r = diag(-1, -1, 0);
    else if (t == "x4a") r = diag(-1, -1, -1);
    else if (t == "x4b") r = diag(1, 1, -1);
    else r = diag(1, 1, 1);
  } else if (j.kind == JordanKind::TwoR) {
    if (t == "x2a") r = reduced(j, {1, 0});
    else if (t == "x2b") r = reduced(j, {-1, 0});
    else if (t == "x3a") r = reduced(j, {0, 1});
    else if (t == "x4a") r = reduced(j, {-1, 1});
    else r = reduced(j, {1, 1});
  } else {
    if (t == "x3") return {0, JordanElement(j, {1}), JordanElement::zero(j), 0};
    r = reduced(j, {t == "x4a" ? -1 : 1});
  }
  return rank4 ? *label.modulus * r : r;
}

BFingerprint fingerprint(const FtsElement& x) {
  require_nonzero(x);
  const Scalar d = quartic_delta(x);
  const Scalar s = x.scale();
  return {rank(x), d.is_zero(s * s * s * s) ? 0 : d.sign(), inertia(b_form_matrix(x))};
}

FtsOrbitLabel orbit_label(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  const BFingerprint f = fingerprint(x);
  std::vector<std::string> hits;
  for (const auto& t : fts_tags(j)) {
    std::optional<Scalar> k;
    if (t[1] == '4') k = Scalar(1);
    if (fingerprint(fts_representative({j, t, k})) == f) hits.push_back(t);
  }
  if (hits.size() == 1) {
    FtsOrbitLabel out{j, hits.front(), std::nullopt};
    if (f.rank == 4) out.modulus = rank4_modulus(x);
    return out;
  }
  if (j.kind == JordanKind::Magic) throw std::domain_error("invariants do not separate the catalog classes here");
  return canonical_form(x).label;
}

}  // namespace freud
