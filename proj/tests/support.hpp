// Shared helpers for the test suites: deterministic random generators for
// polynomials and matrices, a small JSON-schema subset validator for the
// shipped schema files, and a subprocess runner for CLI tests.
#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "flexcore/mat3.hpp"
#include "flexcore/polynomial.hpp"
#include "flexcore/rng.hpp"

namespace testsupport {

using flexcore::Monomial;
using flexcore::Polynomial;
using flexcore::Scalar;
using flexcore::SplitMix64;
using flexcore::Term;
using flexcore::UniversePtr;

inline UniversePtr random_universe(SplitMix64& rng, int min_vars = 2,
                                   int max_vars = 5) {
  const int n = static_cast<int>(rng.range(min_vars, max_vars));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return flexcore::VariableUniverse::make(std::move(names));
}

inline Monomial random_monomial(SplitMix64& rng, std::size_t nvars,
                                int max_exp = 3) {
  Monomial m(nvars);
  for (std::size_t v = 0; v < nvars; ++v)
    m.set_exponent(v, static_cast<int>(rng.range(0, max_exp)));
  return m;
}

inline Polynomial random_polynomial(SplitMix64& rng, const UniversePtr& u,
                                    int max_terms = 6, int max_exp = 3,
                                    int coeff_bound = 9) {
  const int n = static_cast<int>(rng.range(0, max_terms));
  std::vector<Term> terms;
  for (int k = 0; k < n; ++k)
    terms.push_back({random_monomial(rng, u->size(), max_exp),
                     Scalar(rng.range(-coeff_bound, coeff_bound))});
  return Polynomial::from_terms(u, std::move(terms));
}

// Nonzero polynomial over the flex universe, homogeneous of x-degree
// deg_x and coefficient-degree deg_a.
inline Polynomial random_bihomogeneous(SplitMix64& rng, int deg_x, int deg_a,
                                       int terms) {
  const UniversePtr& u = flexcore::VariableUniverse::flex();
  for (;;) {
    std::vector<Term> list;
    for (int k = 0; k < terms; ++k) {
      Monomial m(u->size());
      for (int d = 0; d < deg_x; ++d) {
        const std::size_t v = static_cast<std::size_t>(rng.below(3));
        m.set_exponent(v, m.exponent(v) + 1);
      }
      for (int d = 0; d < deg_a; ++d) {
        const std::size_t v = 3 + static_cast<std::size_t>(rng.below(10));
        m.set_exponent(v, m.exponent(v) + 1);
      }
      long long c = rng.range(-9, 9);
      if (c == 0) c = 1;
      list.push_back({std::move(m), Scalar(c)});
    }
    Polynomial p = Polynomial::from_terms(u, std::move(list));
    if (!p.is_zero()) return p;
  }
}

inline flexcore::Mat3<Scalar> random_invertible_mat3(SplitMix64& rng,
                                                     int bound = 3) {
  for (;;) {
    flexcore::Mat3<Scalar> m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = Scalar(rng.range(-bound, bound));
    if (!flexcore::det3(m).is_zero()) return m;
  }
}

// x -> A.x applied to the x-variables of a flex-universe polynomial.
inline Polynomial compose_with_matrix(const Polynomial& p,
                                      const flexcore::Mat3<Scalar>& a) {
  const UniversePtr& u = p.universe();
  flexcore::SubstitutionMap images;
  for (std::size_t j = 0; j < 3; ++j) {
    Polynomial image(u);
    for (std::size_t k = 0; k < 3; ++k)
      image += a[j][k] * Polynomial::variable(u, k);
    images.emplace(j, std::move(image));
  }
  return flexcore::substitute(p, images);
}

// ---------------------------------------------------------------------
// JSON schema subset: type, properties, required, items, enum,
// additionalProperties:false. Enough for the shipped schema files.
inline bool validate_schema(const nlohmann::json& value,
                            const nlohmann::json& schema, std::string* error,
                            const std::string& path = "$") {
  auto fail = [&](const std::string& why) {
    if (error) *error = path + ": " + why;
    return false;
  };
  if (schema.contains("enum")) {
    for (const auto& candidate : schema["enum"])
      if (value == candidate) return true;
    return fail("value not in enum");
  }
  if (schema.contains("type")) {
    const auto matches = [&](const std::string& t) {
      if (t == "object") return value.is_object();
      if (t == "array") return value.is_array();
      if (t == "string") return value.is_string();
      if (t == "integer") return value.is_number_integer();
      if (t == "number") return value.is_number();
      if (t == "boolean") return value.is_boolean();
      if (t == "null") return value.is_null();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"])
        ok = ok || matches(t.get<std::string>());
    } else {
      ok = matches(schema["type"].get<std::string>());
    }
    if (!ok) return fail("type mismatch, wanted " + schema["type"].dump());
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.dump());
    const auto& props = schema.contains("properties")
                            ? schema["properties"]
                            : nlohmann::json::object();
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        if (!validate_schema(sub, props[key], error, path + "." + key))
          return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"] == false) {
        return fail("unexpected key " + key);
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!validate_schema(value[i], schema["items"], error,
                           path + "[" + std::to_string(i) + "]"))
        return false;
  }
  return true;
}

inline nlohmann::json load_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  nlohmann::json doc;
  in >> doc;
  return doc;
}

inline std::string load_text_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---------------------------------------------------------------------
struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testsupport
