#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "freud/fts_orbits.hpp"
#include "freud/hypermatrix.hpp"
#include "freud/jordan_orbits.hpp"
#include "freud/verify.hpp"

namespace freud {

using Json = nlohmann::ordered_json;

// Input errors, kept apart so front ends can map them to exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DescriptorMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalars travel as strings: "p/q", decimals (read exactly) or "~digits e exp@bits".
// Bare JSON integers are accepted on input.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"algebra": "spin:2,3", "coeffs": [...]}
Json to_json(const JordanElement& a);
// {"algebra": "R", "alpha": .., "A": [...], "B": [...], "beta": ..}
Json to_json(const FtsElement& x);

using Element = std::variant<JordanElement, FtsElement>;
// The "algebra" key may be omitted when `expected` is given; a conflict or a wrong
// coefficient count raises DescriptorMismatch.
Element element_from_json(const Json& j, const std::optional<JordanAlgebra>& expected = std::nullopt);

Json to_json(const FtsTransformation& t);
Json to_json(const TransformationWord& w);
Json to_json(const SpinStr0& g);

Json invariants_report(const JordanElement& a);
Json invariants_report(const FtsElement& x);

// Invariant-only labels; UnsupportedFamily when no classifier covers the family.
Json classify_report(const JordanElement& a, OrbitMode mode);
Json classify_report(const FtsElement& x);
// Constructive reductions with witness and residual.
Json reduce_report(const JordanElement& a, OrbitMode mode);
Json reduce_report(const FtsElement& x);

// {"hypermatrix": [a000, a001, a010, a011, a100, a101, a110, a111]}
Hypermatrix222 hypermatrix_from_json(const Json& j);
Json hyperdet_report(const Hypermatrix222& h);

Json suite_report(const SuiteResult& r);

// One line per report: compact JSON, or "key: value" pairs separated by two spaces.
enum class OutputFormat { Json, Table };
std::string render(const Json& report, OutputFormat format);

}  // namespace freud
