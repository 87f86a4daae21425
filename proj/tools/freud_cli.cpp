// Command-line front end: one JSON element per input line, one report per output line.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "freud/io.hpp"

using namespace freud;

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kMismatch = 3, kUnsupported = 4 };

struct Config {
  std::string algebra;
  std::string mode = "rational";
  int bits = 256;
  int tol = -128;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string file;
  bool identity_component = false;
  // random
  int count = 1;
  std::string level = "fts";
  // verify
  std::string suite = "all";
  int samples = 0;
};

struct Session {
  Config cfg;
  std::optional<JordanAlgebra> algebra;
  OutputFormat format = OutputFormat::Json;

  void emit(const Json& report) const { std::cout << render(report, format) << '\n'; }

  Scalar convert(const Scalar& s) const {
    if (cfg.mode != "bigfloat" || !s.is_exact()) return s;
    return Scalar(BigFloat(s.rational(), cfg.bits, cfg.tol));
  }

  Element load(const Json& j) const {
    Element e = element_from_json(j, algebra);
    if (cfg.mode == "bigfloat") {
      std::visit(
          [&](auto& x) {
            using T = std::decay_t<decltype(x)>;
            auto fix = [&](JordanElement& a) {
              Vec v = a.coeffs();
              for (Scalar& c : v) c = convert(c);
              a = JordanElement(a.algebra(), v);
            };
            if constexpr (std::is_same_v<T, JordanElement>) {
              fix(x);
            } else {
              x.alpha = convert(x.alpha);
              x.beta = convert(x.beta);
              fix(x.A);
              fix(x.B);
            }
          },
          e);
    }
    return e;
  }

  // Feeds each non-blank input line to `handle`.
  template <class F>
  void for_each_line(F handle) const {
    std::ifstream file;
    if (!cfg.file.empty()) {
      file.open(cfg.file);
      if (!file) throw ParseError("cannot open " + cfg.file);
    }
    std::istream& in = cfg.file.empty() ? std::cin : file;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Json j;
      try {
        j = Json::parse(line);
      } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
      }
      handle(j);
    }
  }
};

OrbitMode orbit_mode(const Config& c) { return c.identity_component ? OrbitMode::IdentityComponent : OrbitMode::Full; }

void cmd_invariants(const Session& s) {
  s.for_each_line([&](const Json& j) {
    std::visit([&](const auto& x) { s.emit(invariants_report(x)); }, s.load(j));
  });
}

void cmd_classify(const Session& s) {
  s.for_each_line([&](const Json& j) {
    const Element e = s.load(j);
    if (const auto* a = std::get_if<JordanElement>(&e)) {
      s.emit(classify_report(*a, orbit_mode(s.cfg)));
    } else {
      s.emit(classify_report(std::get<FtsElement>(e)));
    }
  });
}

void cmd_reduce(const Session& s) {
  s.for_each_line([&](const Json& j) {
    const Element e = s.load(j);
    if (const auto* a = std::get_if<JordanElement>(&e)) {
      s.emit(reduce_report(*a, orbit_mode(s.cfg)));
    } else {
      s.emit(reduce_report(std::get<FtsElement>(e)));
    }
  });
}

void cmd_random(const Session& s) {
  if (!s.cfg.seed) throw ParseError("random needs --seed");
  if (!s.algebra) throw ParseError("random needs --algebra");
  Rng rng(*s.cfg.seed);
  for (int t = 0; t < s.cfg.count; ++t) {
    if (s.cfg.level == "jordan") {
      s.emit(to_json(rng.jordan(*s.algebra)));
    } else {
      s.emit(to_json(random_fts(rng, *s.algebra)));
    }
  }
}

int cmd_verify(const Session& s) {
  const std::uint64_t seed = s.cfg.seed.value_or(1);
  std::vector<std::string> names;
  if (s.cfg.suite == "all") {
    names = suite_names();
  } else {
    const auto known = suite_names();
    if (std::find(known.begin(), known.end(), s.cfg.suite) == known.end()) throw ParseError("unknown suite " + s.cfg.suite);
    names = {s.cfg.suite};
  }
  bool ok = true;
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, seed, s.cfg.samples);
    ok = ok && r.passed();
    s.emit(suite_report(r));
  }
  return ok ? kOk : kInternal;
}

void cmd_hyperdet(const Session& s) {
  s.for_each_line([&](const Json& j) { s.emit(hyperdet_report(hypermatrix_from_json(j))); });
}

void fail(const char* kind, const std::string& what) {
  std::cerr << Json{{"error", kind}, {"message", what}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic Jordan algebras and Freudenthal triple systems: invariants and orbit classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Session s;
  Config& c = s.cfg;
  app.add_option("--algebra", c.algebra, "R | 2R | 3R | spin:p,q | magic:R|C|H|O|Cs|Hs|Os");
  app.add_option("--mode", c.mode, "scalar mode")->check(CLI::IsMember({"rational", "bigfloat"}));
  app.add_option("--bits", c.bits, "bigfloat precision in bits")->check(CLI::Range(64, 1 << 16));
  app.add_option("--tol", c.tol, "bigfloat zero tolerance as a power of two")->check(CLI::Range(-(1 << 16), -8));
  app.add_option("--seed", c.seed, "seed for random and verify");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--file", c.file, "read input lines from a file instead of stdin");
  app.add_flag("--identity-component", c.identity_component, "Jordan spin orbits under the identity component");

  auto* inv = app.add_subcommand("invariants", "norm, trace, sharp, Delta, T and rank");
  auto* cls = app.add_subcommand("classify", "orbit label from invariants");
  auto* red = app.add_subcommand("reduce", "canonical form with a witness word");
  auto* rnd = app.add_subcommand("random", "seeded random elements");
  rnd->add_option("--count", c.count, "number of elements")->check(CLI::PositiveNumber);
  rnd->add_option("--level", c.level, "element level")->check(CLI::IsMember({"jordan", "fts"}));
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("suite", c.suite, "suite name or 'all'");
  ver->add_option("--count", c.samples, "samples per family (0 = suite default)")->check(CLI::NonNegativeNumber);
  auto* hyp = app.add_subcommand("hyperdet", "Cayley hyperdeterminant of {\"hypermatrix\": [8 entries]}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    s.format = c.format == "table" ? OutputFormat::Table : OutputFormat::Json;
    if (!c.algebra.empty()) {
      try {
        s.algebra = JordanAlgebra::parse(c.algebra);
      } catch (const std::exception& e) {
        throw ParseError(e.what());
      }
    }
    if (inv->parsed()) cmd_invariants(s);
    if (cls->parsed()) cmd_classify(s);
    if (red->parsed()) cmd_reduce(s);
    if (rnd->parsed()) cmd_random(s);
    if (hyp->parsed()) cmd_hyperdet(s);
    if (ver->parsed()) return cmd_verify(s);
  } catch (const ParseError& e) {
    fail("parse", e.what());
    return kParse;
  } catch (const DescriptorMismatch& e) {
    fail("descriptor-mismatch", e.what());
    return kMismatch;
  } catch (const UnsupportedFamily& e) {
    fail("unsupported-family", e.what());
    return kUnsupported;
  } catch (const std::exception& e) {
    fail("internal", e.what());
    return kInternal;
  }
  return kOk;
}
