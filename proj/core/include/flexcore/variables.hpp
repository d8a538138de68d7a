#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexcore/scalar.hpp"

namespace flexcore {

class VariableUniverse;
using UniversePtr = std::shared_ptr<const VariableUniverse>;

/// Ordered set of named variables. The index order is what fixes the
/// monomial order, so two universes are interchangeable only when their
/// name lists agree.
class VariableUniverse {
 public:
  static constexpr std::size_t max_size = 16;

  static UniversePtr make(std::vector<std::string> names);

  // The 13 variables of the flex setting: x0 x1 x2 followed by the ten
  // cubic coefficients a300 a210 a201 a120 a111 a102 a030 a021 a012 a003
  // (exponent triples in descending lexicographic order).
  static const UniversePtr& flex();

  // Same universe with extra variables appended; the original names keep
  // their indices, so polynomials lift by re-tagging.
  UniversePtr extended(const std::vector<std::string>& extra) const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  bool same_as(const VariableUniverse& other) const {
    return names_ == other.names_;
  }
  // True when our name list is an initial segment of `bigger`'s.
  bool prefix_of(const VariableUniverse& bigger) const;

 private:
  explicit VariableUniverse(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

void require_same_universe(const UniversePtr& a, const UniversePtr& b);

/// Ordered partition of the universe into s nonempty blocks.
class VariableGrouping {
 public:
  VariableGrouping(UniversePtr universe,
                   std::vector<std::vector<std::size_t>> blocks);

  // Two blocks over flex(): {x0,x1,x2} and the ten coefficients.
  static const VariableGrouping& flex_bigrading();

  const UniversePtr& universe() const { return universe_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t i) const {
    return blocks_.at(i);
  }
  std::size_t block_of(std::size_t var) const { return block_of_.at(var); }

 private:
  UniversePtr universe_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Per-block degree vector of a multi-homogeneous polynomial.
class MultiDegree {
 public:
  explicit MultiDegree(std::vector<int> degrees)
      : degrees_(std::move(degrees)) {}

  std::size_t size() const { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_.at(i); }
  const std::vector<int>& degrees() const { return degrees_; }
  std::vector<int> reversed() const {
    return {degrees_.rbegin(), degrees_.rend()};
  }
  bool all_positive() const;
  int total() const;

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
    return a.degrees_ == b.degrees_;
  }
  friend std::strong_ordering operator<=>(const MultiDegree& a,
                                          const MultiDegree& b) {
    return a.degrees_ <=> b.degrees_;
  }

  std::string to_string() const;  // "(3, 1)"

 private:
  std::vector<int> degrees_;
};

/// Total map variable -> Scalar over a universe.
class PointAssignment {
 public:
  PointAssignment(UniversePtr universe, std::vector<Scalar> values);

  // Requires a value for every variable of the universe.
  static PointAssignment from_named(
      const UniversePtr& universe, const std::map<std::string, Scalar>& values);

  const UniversePtr& universe() const { return universe_; }
  const Scalar& value(std::size_t var) const { return values_.at(var); }
  const std::vector<Scalar>& values() const { return values_; }

  // Copy with one coordinate replaced.
  PointAssignment with(std::size_t var, Scalar value) const;

 private:
  UniversePtr universe_;
  std::vector<Scalar> values_;
};

}  // namespace flexcore
