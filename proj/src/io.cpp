#include "freud/io.hpp"

namespace freud {

namespace {

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const Scalar& s : v) a.push_back(to_json(s));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Vec vec_from_json(const Json& j, const char* key) {
  if (!j.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  Vec v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

JordanAlgebra algebra_of(const Json& j, const std::optional<JordanAlgebra>& expected) {
  if (!j.contains("algebra")) {
    if (!expected) throw ParseError("no algebra given: add an \"algebra\" key or pass --algebra");
    return *expected;
  }
  if (!j.at("algebra").is_string()) throw ParseError("'algebra' must be a string");
  JordanAlgebra alg;
  try {
    alg = JordanAlgebra::parse(j.at("algebra").get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  if (expected && !(alg == *expected)) {
    throw DescriptorMismatch("element is over " + alg.name() + " but --algebra is " + expected->name());
  }
  return alg;
}

JordanElement jordan_from(const JordanAlgebra& alg, const Vec& v, const char* what) {
  if (static_cast<int>(v.size()) != alg.dim()) {
    throw DescriptorMismatch(std::string(what) + " has " + std::to_string(v.size()) + " coefficients, " +
                             alg.name() + " needs " + std::to_string(alg.dim()));
  }
  return JordanElement(alg, v);
}

bool spin_classifiable(const JordanAlgebra& j) { return j.kind == JordanKind::Spin && j.p >= 2 && j.q >= 2; }

bool fts_reducible(const JordanAlgebra& j) {
  return spin_classifiable(j) || j.kind == JordanKind::TwoR || j.kind == JordanKind::OneR;
}

Json zero_report(const std::string& algebra, const char* family) {
  return Json{{"family", family}, {"algebra", algebra}, {"label", "zero"}, {"rank", 0}};
}

Json label_json(const JordanOrbitLabel& l) {
  Json r{{"family", "jordan"}, {"algebra", l.family.name()}, {"label", l.tag}, {"rank", l.rank()}};
  if (l.modulus) r["k"] = to_json(*l.modulus);
  if (l.component) r["component"] = to_string(*l.component);
  return r;
}

Json label_json(const FtsOrbitLabel& l) {
  Json r{{"family", "fts"}, {"algebra", l.family.name()}, {"label", l.tag}, {"rank", l.rank()}};
  if (l.modulus) r["k"] = to_json(*l.modulus);
  return r;
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Scalar::parse(j.dump());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad scalar: ") + e.what());
  }
  throw ParseError("scalars must be strings or integers, got " + j.dump());
}

Json to_json(const JordanElement& a) {
  return Json{{"algebra", a.algebra().name()}, {"coeffs", vec_json(a.coeffs())}};
}

Json to_json(const FtsElement& x) {
  return Json{{"algebra", x.algebra().name()},
              {"alpha", to_json(x.alpha)},
              {"A", vec_json(x.A.coeffs())},
              {"B", vec_json(x.B.coeffs())},
              {"beta", to_json(x.beta)}};
}

Element element_from_json(const Json& j, const std::optional<JordanAlgebra>& expected) {
  if (!j.is_object()) throw ParseError("element must be a JSON object");
  const bool jordan = j.contains("coeffs"), fts = j.contains("alpha") || j.contains("A");
  if (jordan == fts) throw ParseError("element needs either 'coeffs' or 'alpha', 'A', 'B', 'beta'");
  const JordanAlgebra alg = algebra_of(j, expected);
  if (jordan) return jordan_from(alg, vec_from_json(j.at("coeffs"), "coeffs"), "coeffs");
  return FtsElement{scalar_from_json(field(j, "alpha")), jordan_from(alg, vec_from_json(field(j, "A"), "A"), "A"),
                    jordan_from(alg, vec_from_json(field(j, "B"), "B"), "B"), scalar_from_json(field(j, "beta"))};
}

Json to_json(const FtsTransformation& t) {
  return std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PhiMove>) return Json{{"move", "phi"}, {"C", vec_json(m.C.coeffs())}};
        if constexpr (std::is_same_v<T, PsiMove>) return Json{{"move", "psi"}, {"D", vec_json(m.D.coeffs())}};
        if constexpr (std::is_same_v<T, TauMove>) {
          return Json{{"move", "tau"}, {"tau", matrix_json(m.tau)}, {"lambda", to_json(m.lambda)}};
        }
        if constexpr (std::is_same_v<T, ZeeMove>) return Json{{"move", "zee"}};
      },
      t);
}

Json to_json(const TransformationWord& w) {
  Json a = Json::array();
  for (const auto& t : w) a.push_back(to_json(t));
  return a;
}

Json to_json(const SpinStr0& g) { return Json{{"s", to_json(g.s)}, {"lorentz", matrix_json(g.lorentz)}}; }

Json invariants_report(const JordanElement& a) {
  const JordanElement s = sharp(a);
  return Json{{"level", "jordan"},   {"algebra", a.algebra().name()}, {"N", to_json(cubic_norm(a))},
              {"Tr", to_json(trace(a))}, {"S", to_json(trace(s))},           {"sharp", vec_json(s.coeffs())},
              {"rank", rank(a)}};
}

Json invariants_report(const FtsElement& x) {
  const FtsElement t = triple(x);
  Json r{{"level", "fts"}, {"algebra", x.algebra().name()}, {"Delta", to_json(quartic_delta(x))}};
  r["T"] = to_json(t);
  r["T"].erase("algebra");
  r["rank"] = rank(x);
  return r;
}

Json classify_report(const JordanElement& a, OrbitMode mode) {
  const JordanAlgebra& j = a.algebra();
  if (!spin_classifiable(j)) throw UnsupportedFamily("no Jordan orbit classifier for " + j.name());
  if (a.is_zero()) return zero_report(j.name(), "jordan");
  return label_json(spin_orbit_label(a, mode));
}

Json classify_report(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  if (!(fts_reducible(j) || j.kind == JordanKind::Magic)) throw UnsupportedFamily("no FTS orbit classifier for " + j.name());
  if (x.is_zero()) return zero_report(j.name(), "fts");
  try {
    return label_json(orbit_label(x));
  } catch (const std::domain_error& e) {
    throw UnsupportedFamily(e.what());
  }
}

Json reduce_report(const JordanElement& a, OrbitMode mode) {
  const JordanAlgebra& j = a.algebra();
  if (!spin_classifiable(j)) throw UnsupportedFamily("no Jordan reduction for " + j.name());
  if (a.is_zero()) return zero_report(j.name(), "jordan");
  const JordanReduction r = spin_canonical_form(a, mode);
  Json out = label_json(r.label);
  out["witness"] = to_json(r.witness);
  out["representative"] = vec_json(r.representative.coeffs());
  out["residual"] = to_json(r.residual);
  return out;
}

Json reduce_report(const FtsElement& x) {
  const JordanAlgebra& j = x.algebra();
  if (!fts_reducible(j)) throw UnsupportedFamily("no constructive FTS reduction for " + j.name());
  if (x.is_zero()) return zero_report(j.name(), "fts");
  const FtsReduction r = canonical_form(x);
  Json out = label_json(r.label);
  out["witness"] = to_json(r.witness);
  out["representative"] = to_json(r.representative);
  out["representative"].erase("algebra");
  out["residual"] = to_json(r.residual);
  return out;
}

Hypermatrix222 hypermatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("hypermatrix")) throw ParseError("expected {\"hypermatrix\": [8 entries]}");
  const Vec v = vec_from_json(j.at("hypermatrix"), "hypermatrix");
  if (v.size() != 8) throw DescriptorMismatch("a 2x2x2 hypermatrix has 8 entries");
  Hypermatrix222 h;
  std::copy(v.begin(), v.end(), h.a.begin());
  return h;
}

Json hyperdet_report(const Hypermatrix222& h) {
  const Scalar d = hyperdet(h);
  return Json{{"hyperdet", to_json(d)}, {"Delta", to_json(-d)}};
}

Json suite_report(const SuiteResult& r) {
  Json out{{"suite", r.suite}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures}};
  if (!r.first_failures.empty()) out["first_failures"] = r.first_failures;
  return out;
}

std::string render(const Json& report, OutputFormat format) {
  if (format == OutputFormat::Json) return report.dump();
  std::string line;
  for (const auto& [k, v] : report.items()) {
    if (!line.empty()) line += "  ";
    line += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return line;
}

}  // namespace freud
