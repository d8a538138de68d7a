// Command-line front end for the flexcore library: certificate runs,
// derivative tables, isotypic decomposition, Hessians, orbit curves and
// finite-field sampling, in text or JSON form.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 usage or expression errors.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flexcore/errors.hpp"
#include "flexcore/fflab.hpp"
#include "flexcore/flex_variety.hpp"
#include "flexcore/multicone.hpp"
#include "flexcore/parser.hpp"

namespace {

using flexcore::FlexSystem;
using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const std::string& payload) { std::cout << payload << "\n"; }

// Run metadata goes to stderr only, so JSON on stdout stays byte-stable.
void note_run(const std::string& command) {
  const auto now = std::chrono::system_clock::now();
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
          .count();
  std::fprintf(stderr, "# flexcert %s (unix time %lld)\n", command.c_str(),
               static_cast<long long>(secs));
}

std::string multidegree_note(const flexcore::MultiDegree& d) {
  std::string s = "internal " + d.to_string();
  if (d.size() == 2) {
    const flexcore::MultiDegree rev(d.reversed());
    s += "; paper pair " + rev.to_string();
  }
  return s;
}

int cmd_certificate(const Options& opt, bool corrupt_witness) {
  const flexcore::CertificateReport report =
      FlexSystem::instance().verify_certificate(corrupt_witness);
  emit(opt.json() ? report.to_json_string() : report.to_text());
  return report.verdict ? exit_ok : exit_check_failed;
}

int cmd_tables(const Options& opt) {
  const FlexSystem& system = FlexSystem::instance();
  const flexcore::PointAssignment c = system.witness();
  bool all_match = true;
  ordered_json doc;
  doc["report"] = "derivative-tables";
  auto& rows = doc["rows"] = ordered_json::array();
  std::string text;
  for (int order = 1; order <= 3; ++order) {
    const char* ref = order == 1 ? "Eq. (18)" : order == 2 ? "Eq. (19)"
                                                           : "Eq. (20)";
    const auto& published = FlexSystem::published_table_values(order);
    for (const auto& row : system.derivative_table(order)) {
      std::string label = "(";
      for (const std::size_t i : row.index)
        label += static_cast<char>('0' + i);
      label += ")";
      const flexcore::Scalar value = row.value.evaluate(c);
      const long long expected = published.at(row.index);
      const bool match = value == flexcore::Scalar(expected);
      all_match = all_match && match;
      ordered_json r;
      r["order"] = order;
      r["index"] = label;
      r["symbolic"] = row.value.to_string();
      r["value_at_witness"] = value.to_string();
      r["expected"] = std::to_string(expected);
      r["paper_ref"] = ref;
      r["match"] = match;
      rows.push_back(std::move(r));
      text += "f_" + label + " = " + row.value.to_string() + "\n    at c: " +
              value.to_string() + "  expected " + std::to_string(expected) +
              " [" + ref + "]" + (match ? "" : "  MISMATCH") + "\n";
    }
  }
  doc["all_match"] = all_match;
  if (opt.json())
    emit(doc.dump(2));
  else
    emit(text + (all_match ? "all rows match" : "MISMATCH present"));
  return all_match ? exit_ok : exit_check_failed;
}

int cmd_decompose(const Options& opt, const std::string& expression) {
  const auto& universe = flexcore::VariableUniverse::flex();
  const flexcore::Polynomial p =
      flexcore::parse_polynomial(expression, universe);
  const auto& grading = flexcore::VariableGrouping::flex_bigrading();
  const auto components = flexcore::isotypic_decompose(p, grading);
  ordered_json doc;
  doc["report"] = "isotypic-decomposition";
  doc["input"] = expression;
  auto& rows = doc["components"] = ordered_json::array();
  std::string text;
  for (const auto& comp : components) {
    ordered_json row;
    row["internal_multidegree"] = comp.degree.degrees();
    row["paper_pair"] = comp.degree.reversed();
    row["polynomial"] = comp.part.to_string();
    rows.push_back(std::move(row));
    text += multidegree_note(comp.degree) + ": " + comp.part.to_string() + "\n";
  }
  doc["count"] = components.size();
  if (components.empty()) {
    doc["note"] = "zero polynomial; empty decomposition";
    text = "zero polynomial; empty decomposition\n";
  }
  emit(opt.json() ? doc.dump(2) : text + std::to_string(components.size()) +
                                      " component(s)");
  return exit_ok;
}

int cmd_hessian(const Options& opt, const std::string& expression) {
  const auto& universe = flexcore::VariableUniverse::flex();
  const flexcore::Polynomial p =
      flexcore::parse_polynomial(expression, universe);
  auto second = [&](std::size_t i, std::size_t j) {
    return flexcore::diff(flexcore::diff(p, i), j);
  };
  const flexcore::Mat3<flexcore::Polynomial> m = {
      {{second(0, 0), second(0, 1), second(0, 2)},
       {second(1, 0), second(1, 1), second(1, 2)},
       {second(2, 0), second(2, 1), second(2, 2)}}};
  const flexcore::Polynomial hess = flexcore::det3(m);

  ordered_json doc;
  doc["report"] = "hessian";
  doc["input"] = expression;
  doc["hessian"] = hess.to_string();
  doc["term_count"] = hess.term_count();
  std::string degree_note = "zero polynomial";
  if (!hess.is_zero()) {
    const auto deg =
        flexcore::multidegree(hess, flexcore::VariableGrouping::flex_bigrading());
    if (const auto* d = std::get_if<flexcore::MultiDegree>(&deg)) {
      doc["multidegree"] = d->degrees();
      degree_note = multidegree_note(*d);
    } else {
      doc["multidegree"] = nullptr;
      degree_note = "not bi-homogeneous";
    }
  } else {
    doc["multidegree"] = nullptr;
  }
  if (opt.json())
    emit(doc.dump(2));
  else
    emit(hess.to_string() + "\nterms: " + std::to_string(hess.term_count()) +
         "; " + degree_note);
  return exit_ok;
}

int cmd_orbit(const Options& opt, std::size_t block, const std::string& t_text) {
  const FlexSystem& system = FlexSystem::instance();
  const flexcore::Scalar t = flexcore::Scalar::from_string(t_text);
  const flexcore::MultiConeSystem cone = system.cone();
  const flexcore::BlockPoint base(system.bigrading(), system.witness());
  const flexcore::BlockPoint moved = cone.orbit_curve(base, block, t);
  const flexcore::BlockPoint limit = cone.orbit_limit(base, block);

  auto point_json = [&](const flexcore::BlockPoint& bp) {
    ordered_json row;
    const auto& u = *bp.assignment().universe();
    for (std::size_t v = 0; v < u.size(); ++v)
      row[u.name(v)] = bp.assignment().value(v).to_string();
    return row;
  };
  const flexcore::Scalar f_val = system.f().evaluate(moved.assignment());
  const flexcore::Scalar h_val = system.h().evaluate(moved.assignment());
  const bool on_cone = f_val.is_zero() && h_val.is_zero();
  const bool limit_on_cone = cone.contains(limit.assignment());

  ordered_json doc;
  doc["report"] = "orbit-curve";
  doc["block"] = block;
  doc["t"] = t.to_string();
  doc["point"] = point_json(moved);
  doc["f"] = f_val.to_string();
  doc["h"] = h_val.to_string();
  doc["on_cone"] = on_cone;
  doc["limit_point"] = point_json(limit);
  doc["limit_on_cone"] = limit_on_cone;

  if (opt.json()) {
    emit(doc.dump(2));
  } else {
    std::string text = "orbit point (block " + std::to_string(block) + ", t = " +
                       t.to_string() + "):\n";
    const auto& u = *moved.assignment().universe();
    for (std::size_t v = 0; v < u.size(); ++v)
      text += "  " + u.name(v) + " = " +
              moved.assignment().value(v).to_string() + "\n";
    text += "f = " + f_val.to_string() + ", h = " + h_val.to_string() + "\n";
    text += std::string("limit point stays on the cone: ") +
            (limit_on_cone ? "yes" : "NO");
    emit(text);
  }
  return on_cone && limit_on_cone ? exit_ok : exit_check_failed;
}

int cmd_sample(const Options& opt, std::uint32_t prime, std::size_t count,
               std::uint64_t seed, std::size_t cubics) {
  const flexcore::PrimeField field(prime);
  ordered_json doc;
  doc["report"] = "finite-field-sample";
  doc["prime"] = prime;
  doc["seed"] = seed;
  std::string text;
  bool ok = true;

  if (prime <= 31) {
    const auto surjectivity = flexcore::check_projection_surjectivity_to_PL(field);
    ok = ok && surjectivity.complete();
    doc["surjectivity"] = ordered_json::parse(surjectivity.to_json_string());
    text += "P(L) coverage " + std::to_string(surjectivity.covered) + "/" +
            std::to_string(surjectivity.total) + "\n";
  } else {
    doc["surjectivity"] = nullptr;
    text += "P(L) coverage: skipped (needs p <= 31)\n";
  }

  const auto sample = flexcore::sample_C_points(field, count, seed);
  doc["c_points"] = ordered_json::parse(sample.to_json_string());
  text += std::to_string(sample.points.size()) + " cone points sampled (seed " +
          std::to_string(seed) + ")\n";

  if (cubics > 0) {
    const auto scan = flexcore::scan_random_cubics(field, cubics, seed);
    doc["flex_scan"] = ordered_json::parse(scan.to_json_string());
    text += std::to_string(scan.cubic_count) + " cubics scanned, " +
            std::to_string(scan.empty_count) + " with no rational flex\n";
  } else {
    doc["flex_scan"] = nullptr;
  }

  emit(opt.json() ? doc.dump(2) : text);
  return ok ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificate toolkit for the variety of flexes of plane cubics"};
  app.require_subcommand(1);
  // let the global --format flag appear after the subcommand as well
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* certificate =
      app.add_subcommand("certificate", "run every certificate check");
  bool corrupt_witness = false;
  certificate->add_flag("--corrupt-witness", corrupt_witness,
                        "test hook: flip the witness x1 to +1");

  auto* tables = app.add_subcommand(
      "tables", "derivative tables with their witness values");

  auto* decompose =
      app.add_subcommand("decompose", "isotypic components of an expression");
  std::string decompose_expr;
  decompose->add_option("expression", decompose_expr)->required();

  auto* hessian =
      app.add_subcommand("hessian", "Hessian determinant of an expression");
  std::string hessian_expr;
  hessian->add_option("expression", hessian_expr)->required();

  auto* orbit = app.add_subcommand("orbit", "torus orbit of the witness");
  std::size_t orbit_block = 0;
  std::string orbit_t = "1";
  orbit->add_option("--block", orbit_block, "block index (0 = x, 1 = coefficients)")
      ->required();
  orbit->add_option("--t", orbit_t, "orbit parameter, a nonzero rational")
      ->required();

  auto* sample = app.add_subcommand("sample", "finite-field reports");
  std::uint32_t sample_prime = 0;
  std::size_t sample_count = 20;
  std::uint64_t sample_seed = 42;
  std::size_t sample_cubics = 0;
  sample->add_option("--prime", sample_prime, "prime modulus, 3 < p <= 65521")
      ->required();
  sample->add_option("--count", sample_count, "number of cone points");
  sample->add_option("--seed", sample_seed, "sampling seed");
  sample->add_option("--cubics", sample_cubics,
                     "also scan this many random cubics for flexes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*certificate) {
      note_run("certificate");
      return cmd_certificate(opt, corrupt_witness);
    }
    if (*tables) {
      note_run("tables");
      return cmd_tables(opt);
    }
    if (*decompose) {
      note_run("decompose");
      return cmd_decompose(opt, decompose_expr);
    }
    if (*hessian) {
      note_run("hessian");
      return cmd_hessian(opt, hessian_expr);
    }
    if (*orbit) {
      note_run("orbit");
      return cmd_orbit(opt, orbit_block, orbit_t);
    }
    if (*sample) {
      note_run("sample");
      return cmd_sample(opt, sample_prime, sample_count, sample_seed,
                        sample_cubics);
    }
  } catch (const flexcore::ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return exit_usage;
  } catch (const flexcore::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
