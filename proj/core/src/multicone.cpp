#include "flexcore/multicone.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "flexcore/errors.hpp"
#include "flexcore/parser.hpp"
#include "flexcore/rng.hpp"

namespace flexcore {

namespace {

bool vanishes(const Scalar& value, const std::optional<BigInt>& modulus) {
  if (!modulus) return value.is_zero();
  if (!value.is_integer())
    throw Error("modular vanishing test on a non-integer value");
  return value.numerator() % *modulus == 0;
}

}  // namespace

TorusElement::TorusElement(std::vector<Scalar> coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.empty()) throw Error("torus element with no coordinates");
  for (const Scalar& c : coordinates_)
    if (c.is_zero()) throw Error("torus element with a zero coordinate");
}

TorusElement TorusElement::identity(std::size_t blocks) {
  return TorusElement(std::vector<Scalar>(blocks, Scalar(1)));
}

TorusElement TorusElement::times(const TorusElement& other) const {
  if (size() != other.size()) throw Error("torus element size mismatch");
  std::vector<Scalar> out(size());
  for (std::size_t i = 0; i < size(); ++i)
    out[i] = coordinates_[i] * other.coordinates_[i];
  return TorusElement(std::move(out));
}

BlockPoint::BlockPoint(VariableGrouping grouping, PointAssignment assignment)
    : grouping_(std::move(grouping)), assignment_(std::move(assignment)) {
  require_same_universe(grouping_.universe(), assignment_.universe());
}

bool BlockPoint::block_is_zero(std::size_t block) const {
  for (const std::size_t var : grouping_.block(block))
    if (!assignment_.value(var).is_zero()) return false;
  return true;
}

bool BlockPoint::in_open_part() const {
  for (std::size_t b = 0; b < grouping_.block_count(); ++b)
    if (block_is_zero(b)) return false;
  return true;
}

BlockPoint torus_act(const TorusElement& t, const BlockPoint& v) {
  if (t.size() != v.grouping().block_count())
    throw Error("torus element does not match the block structure");
  std::vector<Scalar> values = v.assignment().values();
  for (std::size_t var = 0; var < values.size(); ++var)
    values[var] *= t.coordinate(v.grouping().block_of(var));
  return BlockPoint(v.grouping(),
                    PointAssignment(v.assignment().universe(), std::move(values)));
}

Polynomial restrict_block_to_zero(const Polynomial& p,
                                  const VariableGrouping& grouping,
                                  std::size_t block) {
  require_same_universe(p.universe(), grouping.universe());
  if (block >= grouping.block_count()) throw Error("block index out of range");
  SubstitutionMap images;
  for (const std::size_t var : grouping.block(block))
    images.emplace(var, Polynomial(p.universe()));
  return substitute(p, images);
}

MultiHomogeneityReport check_multihomogeneous(
    const VariableGrouping& grouping,
    const std::vector<Polynomial>& generators) {
  MultiHomogeneityReport report;
  const UniversePtr& universe = grouping.universe();
  const std::size_t s = grouping.block_count();

  // Fresh scale variable names, kept clear of the existing ones.
  std::vector<std::string> scale_names;
  for (std::size_t i = 0; i < s; ++i) {
    std::string name = "t" + std::to_string(i + 1);
    while (universe->find(name)) name.insert(name.begin(), '_');
    scale_names.push_back(std::move(name));
  }
  const UniversePtr scaled = universe->extended(scale_names);
  SubstitutionMap scaling;
  for (std::size_t var = 0; var < universe->size(); ++var) {
    const std::size_t tvar = universe->size() + grouping.block_of(var);
    scaling.emplace(var, Polynomial::variable(scaled, tvar) *
                             Polynomial::variable(scaled, var));
  }

  report.all_homogeneous = true;
  report.all_positive = true;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    GeneratorHomogeneityRecord rec;
    rec.index = i;
    const Polynomial& q = generators[i];
    require_same_universe(universe, q.universe());
    if (q.is_zero()) {
      report.generators.push_back(rec);  // zero: no degree, not homogeneous
      report.all_homogeneous = false;
      report.all_positive = false;
      continue;
    }
    const MultidegreeResult by_terms = multidegree(q, grouping);
    if (const auto* bad = std::get_if<NotHomogeneous>(&by_terms)) {
      rec.witness_terms = {bad->witness_a, bad->witness_b};
      report.generators.push_back(rec);
      report.all_homogeneous = false;
      report.all_positive = false;
      continue;
    }
    rec.homogeneous = true;
    rec.degree = std::get<MultiDegree>(by_terms);
    rec.positive = rec.degree->all_positive();

    // Independent route: q(t.v) must equal t1^d1...ts^ds * q(v) identically.
    const Polynomial q_lifted = q.lifted(scaled);
    const Polynomial lhs = substitute(q_lifted, scaling);
    Monomial character(scaled->size());
    for (std::size_t b = 0; b < s; ++b)
      character.set_exponent(universe->size() + b, (*rec.degree)[b]);
    const Polynomial rhs = q_lifted * Polynomial::monomial(scaled, character);
    rec.scaling_identity = (lhs == rhs);

    report.all_homogeneous &= rec.scaling_identity;
    report.all_positive &= rec.positive;
    report.generators.push_back(std::move(rec));
  }
  return report;
}

std::string MultiHomogeneityReport::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["report"] = "multi-homogeneity";
  auto& rows = doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& rec : generators) {
    nlohmann::ordered_json row;
    row["index"] = rec.index;
    row["homogeneous"] = rec.homogeneous;
    row["scaling_identity"] = rec.scaling_identity;
    row["multidegree"] =
        rec.degree ? nlohmann::ordered_json(rec.degree->degrees())
                   : nlohmann::ordered_json(nullptr);
    row["positive"] = rec.positive;
    rows.push_back(std::move(row));
  }
  doc["all_homogeneous"] = all_homogeneous;
  doc["all_positive"] = all_positive;
  return doc.dump(2);
}

MultiConeSystem::MultiConeSystem(VariableGrouping grouping,
                                 std::vector<Polynomial> generators)
    : grouping_(std::move(grouping)), generators_(std::move(generators)) {
  const MultiHomogeneityReport report =
      check_multihomogeneous(grouping_, generators_);
  for (const auto& rec : report.generators) {
    if (!rec.homogeneous || !rec.scaling_identity)
      throw Error("generator " + std::to_string(rec.index) +
                  " is not multi-homogeneous");
    degrees_.push_back(*rec.degree);
  }
  positive_ = report.all_positive;
}

bool MultiConeSystem::contains(const PointAssignment& point,
                               const std::optional<BigInt>& modulus) const {
  for (const Polynomial& q : generators_)
    if (!vanishes(q.evaluate(point), modulus)) return false;
  return true;
}

BlockPoint MultiConeSystem::orbit_curve(const BlockPoint& c, std::size_t block,
                                        const Scalar& t) const {
  if (block >= grouping_.block_count()) throw Error("block index out of range");
  if (t.is_zero()) throw Error("orbit parameter must be nonzero");
  if (!c.in_open_part())
    throw Error("orbit base point has a zero block");
  if (!contains(c.assignment()))
    throw Error("orbit base point is not on the cone");
  std::vector<Scalar> scales(grouping_.block_count(), Scalar(1));
  scales[block] = t;
  return torus_act(TorusElement(std::move(scales)), c);
}

BlockPoint MultiConeSystem::orbit_limit(const BlockPoint& c,
                                        std::size_t block) const {
  if (block >= grouping_.block_count()) throw Error("block index out of range");
  std::vector<Scalar> values = c.assignment().values();
  for (const std::size_t var : grouping_.block(block)) values[var] = Scalar(0);
  BlockPoint limit(grouping_,
                   PointAssignment(c.assignment().universe(), std::move(values)));
  if (!contains(limit.assignment()))
    throw Error("orbit limit point left the cone");
  return limit;
}

std::string MultiConeSystem::to_json_string() const {
  nlohmann::ordered_json doc;
  auto& blocks = doc["blocks"] = nlohmann::ordered_json::array();
  for (std::size_t b = 0; b < grouping_.block_count(); ++b) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const std::size_t var : grouping_.block(b))
      names.push_back(grouping_.universe()->name(var));
    blocks.push_back(std::move(names));
  }
  auto& gens = doc["generators"] = nlohmann::ordered_json::array();
  for (const Polynomial& q : generators_) gens.push_back(q.to_string());
  return doc.dump(2);
}

MultiConeSystem MultiConeSystem::from_json_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad multicone JSON: ") + e.what());
  }
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& block : doc.at("blocks")) {
    std::vector<std::size_t> indices;
    for (const auto& name : block) {
      indices.push_back(names.size());
      names.push_back(name.get<std::string>());
    }
    blocks.push_back(std::move(indices));
  }
  const UniversePtr universe = VariableUniverse::make(std::move(names));
  VariableGrouping grouping(universe, std::move(blocks));
  std::vector<Polynomial> generators;
  for (const auto& text_gen : doc.at("generators"))
    generators.push_back(
        parse_polynomial(text_gen.get<std::string>(), universe));
  return MultiConeSystem(std::move(grouping), std::move(generators));
}

Lemma1Report lemma1_empirical_check(const MultiConeSystem& system,
                                    const Polynomial& g,
                                    const std::vector<BlockPoint>& points,
                                    const std::optional<BigInt>& modulus) {
  require_same_universe(system.grouping().universe(), g.universe());
  Lemma1Report report;
  report.modulus = modulus;

  const auto components = isotypic_decompose(g, system.grouping());
  for (const auto& comp : components)
    report.component_degrees.push_back(comp.degree);

  // Sixteen sampled torus translates with coordinates from {+-1,+-2,+-3,5};
  // fixed seed so reports are reproducible.
  static const long long palette[] = {1, -1, 2, -2, 3, -3, 5};
  SplitMix64 rng(0x11e3u);
  std::vector<TorusElement> translates;
  const std::size_t s = system.grouping().block_count();
  for (int k = 0; k < 16; ++k) {
    std::vector<Scalar> coords(s);
    for (std::size_t b = 0; b < s; ++b)
      coords[b] = Scalar(palette[rng.below(7)]);
    translates.emplace_back(std::move(coords));
  }
  report.translate_count = translates.size();

  report.pass = true;
  for (const BlockPoint& point : points) {
    Lemma1PointRecord rec;
    rec.on_cone = system.contains(point.assignment(), modulus);
    rec.vanishes_on_translates = true;
    for (const TorusElement& t : translates) {
      const BlockPoint moved = torus_act(t, point);
      if (!vanishes(g.evaluate(moved.assignment()), modulus)) {
        rec.vanishes_on_translates = false;
        break;
      }
    }
    rec.components_vanish = true;
    if (rec.vanishes_on_translates) {
      for (std::size_t ci = 0; ci < components.size(); ++ci) {
        if (!vanishes(components[ci].part.evaluate(point.assignment()),
                      modulus)) {
          rec.components_vanish = false;
          rec.failing_component = ci;
          break;
        }
      }
    }
    report.pass = report.pass && rec.on_cone &&
                  (!rec.vanishes_on_translates || rec.components_vanish);
    report.points.push_back(rec);
  }
  return report;
}

std::string Lemma1Report::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["report"] = "isotypic-vanishing";
  auto& degs = doc["component_multidegrees"] = nlohmann::ordered_json::array();
  for (const MultiDegree& d : component_degrees) degs.push_back(d.degrees());
  doc["modulus"] = modulus ? nlohmann::ordered_json(modulus->str())
                           : nlohmann::ordered_json(nullptr);
  doc["translates"] = translate_count;
  auto& pts = doc["points"] = nlohmann::ordered_json::array();
  for (const auto& rec : points) {
    nlohmann::ordered_json row;
    row["on_cone"] = rec.on_cone;
    row["g_vanishes_on_translates"] = rec.vanishes_on_translates;
    row["components_vanish"] = rec.components_vanish;
    if (rec.failing_component)
      row["failing_component"] = *rec.failing_component;
    pts.push_back(std::move(row));
  }
  doc["pass"] = pass;
  return doc.dump(2);
}

}  // namespace flexcore
