#include "flexcore/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "flexcore/errors.hpp"

namespace flexcore {

namespace {

// Sort descending, merge equal monomials, drop zero coefficients.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
      if (out.back().coefficient.is_zero()) out.pop_back();
    } else if (!t.coefficient.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw Error("polynomial without universe");
}

Polynomial::Polynomial(UniversePtr universe, Scalar constant)
    : Polynomial(std::move(universe)) {
  if (!constant.is_zero())
    terms_.push_back({Monomial(universe_->size()), std::move(constant)});
}

Polynomial Polynomial::variable(const UniversePtr& universe, std::size_t var) {
  return monomial(universe, Monomial::variable(universe->size(), var));
}

Polynomial Polynomial::monomial(const UniversePtr& universe, Monomial m,
                                Scalar coefficient) {
  Polynomial p(universe);
  if (m.nvars() != universe->size())
    throw Error("monomial arity does not match the universe");
  if (!coefficient.is_zero())
    p.terms_.push_back({std::move(m), std::move(coefficient)});
  return p;
}

Polynomial Polynomial::from_terms(UniversePtr universe,
                                  std::vector<Term> terms) {
  Polynomial p(std::move(universe));
  for (const Term& t : terms)
    if (t.monomial.nvars() != p.universe_->size())
      throw Error("term arity does not match the universe");
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Scalar(0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().monomial.total_degree();  // leading term is maximal
}

Polynomial Polynomial::operator-() const {
  Polynomial out(universe_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    out.terms_.push_back({t.monomial, -t.coefficient});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_universe(universe_, o.universe_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto cmp = Monomial::compare(terms_[i].monomial, o.terms_[j].monomial);
    if (cmp == std::strong_ordering::greater) {
      merged.push_back(std::move(terms_[i++]));
    } else if (cmp == std::strong_ordering::less) {
      merged.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].coefficient + o.terms_[j].coefficient;
      if (!c.is_zero()) merged.push_back({terms_[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  return *this += -o;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_universe(a.universe_, b.universe_);
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_)
      raw.push_back({s.monomial.times(t.monomial),
                     s.coefficient * t.coefficient});
  return Polynomial::from_terms(a.universe_, std::move(raw));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coefficient *= s;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.universe_->same_as(*b.universe_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw Error("negative polynomial power");
  Polynomial result(universe_, Scalar(1));
  for (int k = 0; k < exponent; ++k) result *= *this;
  return result;
}

Scalar Polynomial::evaluate(const PointAssignment& point) const {
  require_same_universe(universe_, point.universe());
  Scalar sum(0);
  for (const Term& t : terms_) {
    Scalar prod = t.coefficient;
    for (std::size_t v = 0; v < universe_->size(); ++v) {
      const int e = t.monomial.exponent(v);
      if (e > 0) prod *= flexcore::pow(point.value(v), e);
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::lifted(const UniversePtr& bigger) const {
  if (!universe_->prefix_of(*bigger))
    throw UniverseMismatchError(
        "lift target does not extend the source universe");
  Polynomial out(bigger);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    out.terms_.push_back({t.monomial.widened(bigger->size()), t.coefficient});
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const Scalar a = abs(t.coefficient);
    if (first) {
      if (t.coefficient.sign() < 0) os << "-";
      first = false;
    } else {
      os << (t.coefficient.sign() < 0 ? " - " : " + ");
    }
    const bool constant = t.monomial.is_constant();
    if (!a.is_one() || constant) {
      os << a.to_string();
      if (!constant) os << "*";
    }
    if (!constant) os << t.monomial.to_string(*universe_);
  }
  return os.str();
}

Polynomial diff(const Polynomial& p, std::size_t var) {
  if (var >= p.universe()->size())
    throw Error("derivative with respect to an unknown variable");
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    const int e = t.monomial.exponent(var);
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set_exponent(var, e - 1);
    out.push_back({std::move(m), t.coefficient * Scalar(e)});
  }
  return Polynomial::from_terms(p.universe(), std::move(out));
}

Polynomial substitute(const Polynomial& p, const SubstitutionMap& images) {
  for (const auto& [var, image] : images) {
    if (var >= p.universe()->size())
      throw Error("substitution for an unknown variable");
    require_same_universe(p.universe(), image.universe());
  }
  Polynomial result(p.universe());
  for (const Term& t : p.terms()) {
    Monomial fixed(p.universe()->size());
    Polynomial acc(p.universe(), t.coefficient);
    for (std::size_t v = 0; v < p.universe()->size(); ++v) {
      const int e = t.monomial.exponent(v);
      if (e == 0) continue;
      const auto it = images.find(v);
      if (it == images.end())
        fixed.set_exponent(v, e);
      else
        acc *= it->second.pow(e);
    }
    result += acc * Polynomial::monomial(p.universe(), fixed);
  }
  return result;
}

MultiDegree block_degrees(const Monomial& m, const VariableGrouping& grouping) {
  std::vector<int> degrees(grouping.block_count(), 0);
  for (std::size_t b = 0; b < grouping.block_count(); ++b)
    for (const std::size_t var : grouping.block(b))
      degrees[b] += m.exponent(var);
  return MultiDegree(std::move(degrees));
}

MultidegreeResult multidegree(const Polynomial& p,
                              const VariableGrouping& grouping) {
  require_same_universe(p.universe(), grouping.universe());
  if (p.is_zero())
    throw ZeroPolynomialError("the zero polynomial has no multidegree");
  const MultiDegree first = block_degrees(p.terms().front().monomial, grouping);
  for (const Term& t : p.terms()) {
    const MultiDegree d = block_degrees(t.monomial, grouping);
    if (!(d == first))
      return NotHomogeneous{p.terms().front().monomial, t.monomial};
  }
  return first;
}

std::vector<IsotypicComponent> isotypic_decompose(
    const Polynomial& p, const VariableGrouping& grouping) {
  require_same_universe(p.universe(), grouping.universe());
  std::map<MultiDegree, std::vector<Term>> buckets;
  for (const Term& t : p.terms())
    buckets[block_degrees(t.monomial, grouping)].push_back(t);
  std::vector<IsotypicComponent> out;
  out.reserve(buckets.size());
  for (auto& [degree, terms] : buckets)
    out.push_back(
        {degree, Polynomial::from_terms(p.universe(), std::move(terms))});
  return out;  // std::map iteration makes this ascending by multidegree
}

std::string polynomial_to_json(const Polynomial& p) {
  nlohmann::ordered_json doc;
  doc["variables"] = p.universe()->names();
  auto& terms = doc["terms"] = nlohmann::ordered_json::array();
  for (const Term& t : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < p.universe()->size(); ++v)
      exps.push_back(t.monomial.exponent(v));
    terms.push_back(
        nlohmann::ordered_json::array({exps, t.coefficient.to_string()}));
  }
  return doc.dump(2);
}

Polynomial polynomial_from_json(const UniversePtr& universe,
                                const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad polynomial JSON: ") + e.what());
  }
  if (doc.contains("variables")) {
    const auto names = doc["variables"].get<std::vector<std::string>>();
    if (names != universe->names())
      throw UniverseMismatchError("polynomial JSON names a different universe");
  }
  std::vector<Term> terms;
  for (const auto& pair : doc.at("terms")) {
    const auto exps = pair.at(0).get<std::vector<int>>();
    if (exps.size() != universe->size())
      throw Error("exponent vector of the wrong length");
    terms.push_back({Monomial::from_exponents(exps),
                     Scalar::from_string(pair.at(1).get<std::string>())});
  }
  return Polynomial::from_terms(universe, std::move(terms));
}

}  // namespace flexcore
