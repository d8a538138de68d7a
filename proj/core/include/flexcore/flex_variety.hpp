#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "flexcore/mat3.hpp"
#include "flexcore/multicone.hpp"
#include "flexcore/polynomial.hpp"

namespace flexcore {

/// The universal ternary cubic sum_{i0+i1+i2=3} a_{i0 i1 i2} x0^i0 x1^i1 x2^i2
/// over the 13-variable flex universe: ten terms, one per coefficient.
Polynomial universal_cubic();

/// Determinant of the matrix of second x-partials of the universal cubic.
Polynomial universal_cubic_hessian();

/// Exponent triples (i0,i1,i2) with i0+i1+i2=3 in the coefficient order of
/// the flex universe (descending lexicographic).
const std::array<std::array<int, 3>, 10>& cubic_exponent_triples();

struct DerivativeTableRow {
  std::vector<std::size_t> index;  // sorted x-indices, e.g. {0,1} for (01)
  Polynomial value;
};

struct CertificateCheck {
  std::string id;
  std::string paper_ref;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  std::vector<std::string> assumptions;
  std::string jacobian_minor;  // decimal value of the (x0,x1) minor
  bool verdict = false;        // pass iff every check passes

  std::string to_json_string() const;
  std::string to_text() const;
};

/// The concrete system of the flex setting: f, its Hessian determinant h,
/// the bigrading into x- and coefficient-variables, all partial-derivative
/// tables, and the distinguished witness point. Immutable after
/// construction; every method is const.
class FlexSystem {
 public:
  FlexSystem();
  static const FlexSystem& instance();

  const UniversePtr& universe() const { return universe_; }
  const VariableGrouping& bigrading() const;
  const Polynomial& f() const { return f_; }
  const Polynomial& h() const { return h_; }

  // Iterated x-partial for a multi-index of order 1..3 (order of the
  // indices is immaterial; they are stored sorted).
  const Polynomial& f_partial(std::vector<std::size_t> index) const;
  // dh/dx_i computed by direct differentiation of the expanded h.
  const Polynomial& h_partial(std::size_t i) const;
  // The same derivative assembled as the twelve-product expansion of the
  // cofactor form of h; agreeing with h_partial() is a certificate check.
  Polynomial h_partial_expanded(std::size_t i) const;

  // All rows of the order-1, order-2 or order-3 derivative table.
  std::vector<DerivativeTableRow> derivative_table(int order) const;
  // The table rows evaluated at the witness point.
  std::map<std::vector<std::size_t>, Scalar> table_values_at_witness(
      int order) const;
  // Published values the tables must reproduce, with their labels.
  static const std::map<std::vector<std::size_t>, long long>&
  published_table_values(int order);

  // The distinguished point: x = (0,-1,1) on the cubic
  // x0^3+x1^3+x2^3+x0*x1*x2 (coefficients as the alpha-part).
  PointAssignment witness() const;
  // That cubic as a polynomial in x0,x1,x2 over the flex universe.
  Polynomial witness_cubic() const;

  // det( f_(i) f_(j) ; h_(i) h_(j) ) evaluated at the point.
  Scalar jacobian_minor(const PointAssignment& point, std::size_t col_i = 0,
                        std::size_t col_j = 1) const;

  // The cone cut out by f and h over the bigrading.
  MultiConeSystem cone() const;

  // Pushes the witness through an invertible change of x-coordinates:
  // substitutes x -> A.x in the witness cubic, re-reads the coefficients,
  // and moves the x-point by A^-1. The result satisfies f = h = 0, which
  // is asserted. Throws SingularMatrixError on det(A) = 0.
  PointAssignment transport_witness(const Mat3<Scalar>& A) const;

  // Runs every check of the end-to-end certificate. With corrupt_witness
  // the witness x1-coordinate is flipped to +1, which must make the
  // membership checks fail; the report records exactly what broke.
  CertificateReport verify_certificate(bool corrupt_witness = false) const;

 private:
  UniversePtr universe_;
  Polynomial f_;
  Polynomial h_;
  std::map<std::vector<std::size_t>, Polynomial> f_partials_;
  std::array<Polynomial, 3> h_partials_;
};

}  // namespace flexcore
