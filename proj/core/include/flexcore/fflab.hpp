#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flexcore/multicone.hpp"
#include "flexcore/polynomial.hpp"

namespace flexcore {

/// Arithmetic in Z/pZ with canonical residues 0..p-1. The modulus must be
/// a prime with 3 < p <= 65521, so that 2, 3 and 6 are always units.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on 0

  std::uint32_t reduce(const BigInt& n) const;
  // Throws when the denominator is divisible by p.
  std::uint32_t reduce(const Scalar& s) const;

 private:
  std::uint32_t p_;
};

/// Sparse polynomial with residue coefficients. A deliberately separate
/// implementation from Polynomial, so that "reduction commutes with
/// add/mul/diff" is a genuine cross-check between two code paths.
class FpPolynomial {
 public:
  FpPolynomial(UniversePtr universe, PrimeField field);
  static FpPolynomial reduce(const Polynomial& p, const PrimeField& field);

  const UniversePtr& universe() const { return universe_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, std::uint32_t>>& terms() const {
    return terms_;
  }

  FpPolynomial add(const FpPolynomial& o) const;
  FpPolynomial mul(const FpPolynomial& o) const;
  FpPolynomial diff(std::size_t var) const;
  // Substitute constants for some variables.
  FpPolynomial specialize(const std::map<std::size_t, std::uint32_t>& values) const;
  // values[v] is the residue assigned to variable v (all variables).
  std::uint32_t evaluate(std::span<const std::uint32_t> values) const;

  friend bool operator==(const FpPolynomial& a, const FpPolynomial& b);

 private:
  UniversePtr universe_;
  PrimeField field_;
  std::vector<std::pair<Monomial, std::uint32_t>> terms_;  // descending order
};

FpPolynomial reduce_mod_p(const Polynomial& p, const PrimeField& field);

/// Point of the projective plane over F_p, normalized so that the first
/// nonzero coordinate is 1; equality is coordinate-wise on normal forms.
class ProjectivePoint2 {
 public:
  ProjectivePoint2(const PrimeField& field, std::uint32_t c0, std::uint32_t c1,
                   std::uint32_t c2);

  const std::array<std::uint32_t, 3>& coords() const { return coords_; }
  friend bool operator==(const ProjectivePoint2& a, const ProjectivePoint2& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const ProjectivePoint2& a, const ProjectivePoint2& b) {
    return a.coords_ < b.coords_;
  }
  std::string to_string() const;  // "(0:1:12)"

 private:
  std::array<std::uint32_t, 3> coords_;
};

/// All p^2+p+1 points, already in normal form.
std::vector<ProjectivePoint2> enumerate_projective_plane(const PrimeField& field);

/// Cubic coefficients in the order of the ten universe coefficients
/// (exponent triples descending lexicographic).
using CubicCoefficients = std::array<std::uint32_t, 10>;

/// Hessian-determinant coefficients of the cubic, same basis and order.
CubicCoefficients hessian_coefficients_mod_p(const PrimeField& field,
                                             const CubicCoefficients& alpha);

/// Exhaustive scan of the projective plane for the common zeros of the
/// cubic and its Hessian. Throws on the zero cubic.
std::vector<ProjectivePoint2> flexes_of_cubic(const PrimeField& field,
                                              const CubicCoefficients& alpha);

/// True when some full projective line lies inside the point set; used as
/// a cheap degeneracy screen for scanned cubics.
bool contains_projective_line(const PrimeField& field,
                              const std::vector<ProjectivePoint2>& points);

struct SurjectivityExhibit {
  ProjectivePoint2 point;
  CubicCoefficients alpha;
};

/// Constructive coverage of the projective plane by transported witnesses.
struct SurjectivityReport {
  std::uint32_t prime = 0;
  std::size_t total = 0;
  std::size_t covered = 0;
  std::vector<ProjectivePoint2> failures;
  std::vector<SurjectivityExhibit> exhibits;  // recorded when p <= 13

  bool complete() const { return covered == total && failures.empty(); }
  std::string to_json_string() const;
};

/// For every point e of P^2(F_p), transports the integral witness through
/// a change of coordinates sending e to the witness x-point and verifies
/// the reduced transported pair (e, cubic) satisfies f = h = 0 mod p.
/// Requires p <= 31 so the double enumeration stays desk-sized.
SurjectivityReport check_projection_surjectivity_to_PL(const PrimeField& field);

/// Deterministic sample of points on the cone over F_p.
struct CPointSampleReport {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<BlockPoint> points;  // residue coordinates as integer Scalars
  std::size_t line_retries = 0;    // exhausted direction lines, in total
  std::string to_json_string() const;
};

/// Returns `count` points with f = h = 0 in F_p. Point #0 is always the
/// reduction of the integral witness; the rest are drawn by fixing a
/// random x, solving the linear condition f = 0 for the coefficients and
/// scanning coefficient lines for a root of h. Identical seeds give
/// identical samples.
CPointSampleReport sample_C_points(const PrimeField& field, std::size_t count,
                                   std::uint64_t seed);

/// Flex counts of randomly drawn cubics; empty results are counted, not
/// failed, since rational flexes need not exist over F_p.
struct FlexFrequencyReport {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t cubic_count = 0;
  std::size_t empty_count = 0;
  std::map<std::size_t, std::size_t> histogram;  // #flexes -> #cubics
  std::string to_json_string() const;
};

FlexFrequencyReport scan_random_cubics(const PrimeField& field,
                                       std::size_t count, std::uint64_t seed);

}  // namespace flexcore
