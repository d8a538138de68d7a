#include "flexcore/variables.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flexcore/errors.hpp"

namespace flexcore {

VariableUniverse::VariableUniverse(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty()) throw Error("empty variable universe");
  if (names_.size() > max_size)
    throw Error("variable universe larger than " + std::to_string(max_size));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("empty variable name");
    if (!index_.emplace(names_[i], i).second)
      throw Error("duplicate variable name: " + names_[i]);
  }
}

UniversePtr VariableUniverse::make(std::vector<std::string> names) {
  return UniversePtr(new VariableUniverse(std::move(names)));
}

const UniversePtr& VariableUniverse::flex() {
  static const UniversePtr u = make({"x0", "x1", "x2", "a300", "a210", "a201",
                                     "a120", "a111", "a102", "a030", "a021",
                                     "a012", "a003"});
  return u;
}

UniversePtr VariableUniverse::extended(
    const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  names.insert(names.end(), extra.begin(), extra.end());
  return make(std::move(names));
}

std::optional<std::size_t> VariableUniverse::find(std::string_view name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool VariableUniverse::prefix_of(const VariableUniverse& bigger) const {
  if (names_.size() > bigger.names_.size()) return false;
  return std::equal(names_.begin(), names_.end(), bigger.names_.begin());
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return;
  if (a && b && a->same_as(*b)) return;
  throw UniverseMismatchError("operands live in different variable universes");
}

VariableGrouping::VariableGrouping(UniversePtr universe,
                                   std::vector<std::vector<std::size_t>> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  if (!universe_) throw Error("grouping without universe");
  if (blocks_.empty()) throw Error("grouping needs at least one block");
  block_of_.assign(universe_->size(), blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw Error("empty block in grouping");
    for (const std::size_t var : blocks_[b]) {
      if (var >= universe_->size())
        throw Error("block variable outside the universe");
      if (block_of_[var] != blocks_.size())
        throw Error("variable listed in two blocks: " + universe_->name(var));
      block_of_[var] = b;
    }
  }
  for (std::size_t var = 0; var < universe_->size(); ++var)
    if (block_of_[var] == blocks_.size())
      throw Error("variable missing from the grouping: " +
                  universe_->name(var));
}

const VariableGrouping& VariableGrouping::flex_bigrading() {
  static const VariableGrouping g(
      VariableUniverse::flex(),
      {{0, 1, 2}, {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}});
  return g;
}

bool MultiDegree::all_positive() const {
  return std::all_of(degrees_.begin(), degrees_.end(),
                     [](int d) { return d > 0; });
}

int MultiDegree::total() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) os << ", ";
    os << degrees_[i];
  }
  os << ")";
  return os.str();
}

PointAssignment::PointAssignment(UniversePtr universe,
                                 std::vector<Scalar> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (!universe_) throw Error("assignment without universe");
  if (values_.size() != universe_->size())
    throw Error("assignment must cover every variable of the universe");
}

PointAssignment PointAssignment::from_named(
    const UniversePtr& universe, const std::map<std::string, Scalar>& values) {
  std::vector<Scalar> coords(universe->size());
  std::vector<bool> seen(universe->size(), false);
  for (const auto& [name, value] : values) {
    const auto idx = universe->find(name);
    if (!idx) throw Error("assignment names unknown variable: " + name);
    coords[*idx] = value;
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw Error("assignment misses variable: " + universe->name(i));
  return PointAssignment(universe, std::move(coords));
}

PointAssignment PointAssignment::with(std::size_t var, Scalar value) const {
  std::vector<Scalar> coords = values_;
  coords.at(var) = std::move(value);
  return PointAssignment(universe_, std::move(coords));
}

}  // namespace flexcore
