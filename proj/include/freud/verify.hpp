#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freud/jordan.hpp"

namespace freud {

struct SuiteResult {
  std::string suite;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> first_failures;  // at most a few, for diagnostics
  bool passed() const { return checks > 0 && failures == 0; }
};

// Families exercised by the suites.
std::vector<JordanAlgebra> jordan_test_families();  // magic x7, Spin(2,2..6), Spin(6,2), 3R, 2R, R
std::vector<JordanAlgebra> fts_test_families();

// Each suite is deterministic in (seed, count); count is the per-family sample size.
SuiteResult suite_adjoint_identity(std::uint64_t seed, int count);
SuiteResult suite_trace_relations(std::uint64_t seed, int count);
SuiteResult suite_composition(std::uint64_t seed, int count);
SuiteResult suite_brown_axioms(std::uint64_t seed, int count);
SuiteResult suite_yokota_identities(std::uint64_t seed, int count);
SuiteResult suite_automorphisms(std::uint64_t seed, int count);
SuiteResult suite_hyperdet(std::uint64_t seed, int count);
SuiteResult suite_fr_rank(std::uint64_t seed, int count);

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name; count <= 0 picks the suite default.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count = 0);

}  // namespace freud
