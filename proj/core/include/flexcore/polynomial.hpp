#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "flexcore/monomial.hpp"
#include "flexcore/scalar.hpp"
#include "flexcore/variables.hpp"

namespace flexcore {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse multivariate polynomial in canonical form: terms sorted by
/// strictly descending monomial order and no zero coefficient is ever
/// stored. Two polynomials are equal iff their term lists are identical.
/// All values are immutable after construction and every operation is a
/// pure function, so instances can be shared freely across threads.
class Polynomial {
 public:
  explicit Polynomial(UniversePtr universe);  // zero
  Polynomial(UniversePtr universe, Scalar constant);
  static Polynomial variable(const UniversePtr& universe, std::size_t var);
  static Polynomial monomial(const UniversePtr& universe, Monomial m,
                             Scalar coefficient = Scalar(1));
  // Collects, sorts and merges arbitrary terms into canonical form.
  static Polynomial from_terms(UniversePtr universe, std::vector<Term> terms);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;  // zero when absent
  int total_degree() const;                     // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(int exponent) const;  // exponent >= 0

  Scalar evaluate(const PointAssignment& point) const;

  // Re-tag to an extended universe that has this one as a name prefix.
  Polynomial lifted(const UniversePtr& bigger) const;

  // Canonical text form; parse_polynomial() inverts it exactly.
  std::string to_string() const;

 private:
  UniversePtr universe_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to one variable.
Polynomial diff(const Polynomial& p, std::size_t var);

/// Simultaneous substitution. Unmapped variables are kept fixed; every
/// image must live in the same universe as p.
using SubstitutionMap = std::map<std::size_t, Polynomial>;
Polynomial substitute(const Polynomial& p, const SubstitutionMap& images);

/// Per-block degree vector of one monomial.
MultiDegree block_degrees(const Monomial& m, const VariableGrouping& grouping);

/// Two terms whose per-block degrees disagree.
struct NotHomogeneous {
  Monomial witness_a;
  Monomial witness_b;
};

/// Common per-block degree vector, or a witness pair of terms. Throws
/// ZeroPolynomialError on the zero polynomial (its degree is undefined).
using MultidegreeResult = std::variant<MultiDegree, NotHomogeneous>;
MultidegreeResult multidegree(const Polynomial& p,
                              const VariableGrouping& grouping);

struct IsotypicComponent {
  MultiDegree degree;
  Polynomial part;
};

/// Splits p into its multi-homogeneous parts, sorted by multidegree.
/// The parts are nonzero, have pairwise distinct multidegrees and sum
/// back to p; the zero polynomial yields an empty list.
std::vector<IsotypicComponent> isotypic_decompose(
    const Polynomial& p, const VariableGrouping& grouping);

/// Serialized golden-file form: the canonical term list as JSON pairs of
/// exponent vector and coefficient string.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const UniversePtr& universe,
                                const std::string& text);

}  // namespace flexcore
