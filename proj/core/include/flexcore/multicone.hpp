#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flexcore/polynomial.hpp"

namespace flexcore {

/// Element of the s-torus acting block-wise on a product of coordinate
/// spaces; every coordinate is nonzero by construction.
class TorusElement {
 public:
  explicit TorusElement(std::vector<Scalar> coordinates);
  static TorusElement identity(std::size_t blocks);

  std::size_t size() const { return coordinates_.size(); }
  const Scalar& coordinate(std::size_t block) const {
    return coordinates_.at(block);
  }

  TorusElement times(const TorusElement& other) const;

 private:
  std::vector<Scalar> coordinates_;
};

/// Point of the product space together with its block structure.
class BlockPoint {
 public:
  BlockPoint(VariableGrouping grouping, PointAssignment assignment);

  const VariableGrouping& grouping() const { return grouping_; }
  const PointAssignment& assignment() const { return assignment_; }

  // True when every coordinate of block i vanishes, i.e. the projection
  // to the i-th factor is the zero vector.
  bool block_is_zero(std::size_t block) const;
  // Membership in U = V minus the union of the zero-block loci.
  bool in_open_part() const;

 private:
  VariableGrouping grouping_;
  PointAssignment assignment_;
};

/// Block i scaled by t_i, every other coordinate untouched.
BlockPoint torus_act(const TorusElement& t, const BlockPoint& v);

/// Substitutes zero for every variable of the block. Any polynomial with
/// positive degree in that block collapses to zero, which is what puts
/// the coordinate hyperplanes inside the cone.
Polynomial restrict_block_to_zero(const Polynomial& p,
                                  const VariableGrouping& grouping,
                                  std::size_t block);

struct GeneratorHomogeneityRecord {
  std::size_t index = 0;
  bool homogeneous = false;       // per-term degree route
  bool scaling_identity = false;  // substitution route with fresh scale variables
  std::optional<MultiDegree> degree;
  bool positive = false;  // all block degrees strictly positive
  std::optional<std::pair<Monomial, Monomial>> witness_terms;
};

struct MultiHomogeneityReport {
  std::vector<GeneratorHomogeneityRecord> generators;
  bool all_homogeneous = false;
  bool all_positive = false;

  std::string to_json_string() const;
};

/// Verifies multi-homogeneity of each candidate generator two ways: by
/// per-term block degrees, and symbolically by adjoining fresh scale
/// variables t_1..t_s, substituting v -> t.v and comparing against the
/// predicted character times the original. Also records whether every
/// block degree is strictly positive.
MultiHomogeneityReport check_multihomogeneous(
    const VariableGrouping& grouping, const std::vector<Polynomial>& generators);

/// A torus-stable affine cone cut out by multi-homogeneous generators.
class MultiConeSystem {
 public:
  // Throws when a generator is zero or not multi-homogeneous.
  MultiConeSystem(VariableGrouping grouping, std::vector<Polynomial> generators);

  const VariableGrouping& grouping() const { return grouping_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<MultiDegree>& degrees() const { return degrees_; }
  // Whether every generator has strictly positive degree in every block.
  bool positivity_holds() const { return positive_; }

  // All generators vanish at the point; with a modulus, vanish mod m
  // (every generator value must then be an integer).
  bool contains(const PointAssignment& point,
                const std::optional<BigInt>& modulus = std::nullopt) const;

  // The point of the one-parameter orbit of c scaling block `block` by t.
  // Requires c on the cone with no zero block, and t nonzero.
  BlockPoint orbit_curve(const BlockPoint& c, std::size_t block,
                         const Scalar& t) const;
  // Its limit as the scale goes to zero: block zeroed out. For systems
  // with positive degrees this stays on the cone, and that is asserted.
  BlockPoint orbit_limit(const BlockPoint& c, std::size_t block) const;

  std::string to_json_string() const;
  static MultiConeSystem from_json_string(const std::string& text);

 private:
  VariableGrouping grouping_;
  std::vector<Polynomial> generators_;
  std::vector<MultiDegree> degrees_;
  bool positive_ = false;
};

struct Lemma1PointRecord {
  bool on_cone = false;
  bool vanishes_on_translates = false;  // g itself at sampled torus translates
  bool components_vanish = false;       // every isotypic component at the point
  std::optional<std::size_t> failing_component;
};

struct Lemma1Report {
  std::vector<MultiDegree> component_degrees;
  std::vector<Lemma1PointRecord> points;
  std::optional<BigInt> modulus;
  std::size_t translate_count = 0;
  bool pass = false;

  std::string to_json_string() const;
};

/// Empirical check of the isotypic-vanishing statement: wherever g
/// vanishes on a sampled set of torus translates of a cone point, every
/// isotypic component of g must vanish at that point too. Exact over the
/// rationals, or modulo m for residue-coordinate points.
Lemma1Report lemma1_empirical_check(
    const MultiConeSystem& system, const Polynomial& g,
    const std::vector<BlockPoint>& points,
    const std::optional<BigInt>& modulus = std::nullopt);

}  // namespace flexcore
