#include "flexcore/fflab.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "flexcore/errors.hpp"
#include "flexcore/flex_variety.hpp"
#include "flexcore/rng.hpp"

namespace flexcore {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint32_t max_prime = 65521;  // largest prime below 2^16

std::uint32_t nonneg_mod(long long v, std::uint32_t p) {
  const long long m = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 3 || p > max_prime || !is_prime(p))
    throw Error("modulus must be a prime with 3 < p <= " +
                std::to_string(max_prime) + ", got " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t e) const {
  std::uint64_t result = 1;
  std::uint64_t b = base % p_;
  while (e > 0) {
    if (e & 1) result = result * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error("inverse of zero residue");
  return pow(a % p_, p_ - 2);
}

std::uint32_t PrimeField::reduce(const BigInt& n) const {
  BigInt r = n % p_;
  if (r < 0) r += p_;
  return r.convert_to<std::uint32_t>();
}

std::uint32_t PrimeField::reduce(const Scalar& s) const {
  const std::uint32_t den = reduce(s.denominator());
  if (den == 0)
    throw Error("denominator divisible by the modulus " + std::to_string(p_));
  return mul(reduce(s.numerator()), inv(den));
}

FpPolynomial::FpPolynomial(UniversePtr universe, PrimeField field)
    : universe_(std::move(universe)), field_(field) {
  if (!universe_) throw Error("polynomial without universe");
}

FpPolynomial FpPolynomial::reduce(const Polynomial& p, const PrimeField& field) {
  FpPolynomial out(p.universe(), field);
  for (const Term& t : p.terms()) {
    const std::uint32_t c = field.reduce(t.coefficient);
    if (c != 0) out.terms_.emplace_back(t.monomial, c);
  }
  return out;
}

FpPolynomial reduce_mod_p(const Polynomial& p, const PrimeField& field) {
  return FpPolynomial::reduce(p, field);
}

FpPolynomial FpPolynomial::add(const FpPolynomial& o) const {
  require_same_universe(universe_, o.universe_);
  if (field_.modulus() != o.field_.modulus())
    throw Error("residue polynomials over different moduli");
  FpPolynomial out(universe_, field_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto cmp = Monomial::compare(terms_[i].first, o.terms_[j].first);
    if (cmp == std::strong_ordering::greater) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      const std::uint32_t c = field_.add(terms_[i].second, o.terms_[j].second);
      if (c != 0) out.terms_.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

FpPolynomial FpPolynomial::mul(const FpPolynomial& o) const {
  require_same_universe(universe_, o.universe_);
  if (field_.modulus() != o.field_.modulus())
    throw Error("residue polynomials over different moduli");
  std::vector<std::pair<Monomial, std::uint32_t>> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      raw.emplace_back(a.first.times(b.first), field_.mul(a.second, b.second));
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return Monomial::compare(a.first, b.first) == std::strong_ordering::greater;
  });
  FpPolynomial out(universe_, field_);
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second = field_.add(out.terms_.back().second, t.second);
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (t.second != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

FpPolynomial FpPolynomial::diff(std::size_t var) const {
  if (var >= universe_->size())
    throw Error("derivative with respect to an unknown variable");
  FpPolynomial out(universe_, field_);
  for (const auto& t : terms_) {
    const int e = t.first.exponent(var);
    if (e == 0) continue;
    const std::uint32_t c =
        field_.mul(t.second, static_cast<std::uint32_t>(e) % field_.modulus());
    if (c == 0) continue;
    Monomial m = t.first;
    m.set_exponent(var, e - 1);
    out.terms_.emplace_back(std::move(m), c);
  }
  return out;
}

FpPolynomial FpPolynomial::specialize(
    const std::map<std::size_t, std::uint32_t>& values) const {
  std::vector<std::pair<Monomial, std::uint32_t>> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::uint32_t c = t.second;
    Monomial m = t.first;
    for (const auto& [var, value] : values) {
      const int e = t.first.exponent(var);
      if (e == 0) continue;
      c = field_.mul(c, field_.pow(value, static_cast<std::uint64_t>(e)));
      m.set_exponent(var, 0);
    }
    if (c != 0) raw.emplace_back(std::move(m), c);
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return Monomial::compare(a.first, b.first) == std::strong_ordering::greater;
  });
  FpPolynomial out(universe_, field_);
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second = field_.add(out.terms_.back().second, t.second);
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

std::uint32_t FpPolynomial::evaluate(
    std::span<const std::uint32_t> values) const {
  if (values.size() != universe_->size())
    throw Error("evaluation vector of the wrong length");
  std::uint32_t sum = 0;
  for (const auto& t : terms_) {
    std::uint32_t prod = t.second;
    for (std::size_t v = 0; v < universe_->size(); ++v) {
      const int e = t.first.exponent(v);
      if (e > 0)
        prod = field_.mul(prod,
                          field_.pow(values[v], static_cast<std::uint64_t>(e)));
    }
    sum = field_.add(sum, prod);
  }
  return sum;
}

bool operator==(const FpPolynomial& a, const FpPolynomial& b) {
  return a.field_.modulus() == b.field_.modulus() &&
         a.universe_->same_as(*b.universe_) && a.terms_ == b.terms_;
}

ProjectivePoint2::ProjectivePoint2(const PrimeField& field, std::uint32_t c0,
                                   std::uint32_t c1, std::uint32_t c2) {
  const std::uint32_t p = field.modulus();
  coords_ = {c0 % p, c1 % p, c2 % p};
  std::size_t lead = 0;
  while (lead < 3 && coords_[lead] == 0) ++lead;
  if (lead == 3) throw Error("projective point with all coordinates zero");
  const std::uint32_t scale = field.inv(coords_[lead]);
  for (auto& c : coords_) c = field.mul(c, scale);
}

std::string ProjectivePoint2::to_string() const {
  std::ostringstream os;
  os << "(" << coords_[0] << ":" << coords_[1] << ":" << coords_[2] << ")";
  return os.str();
}

std::vector<ProjectivePoint2> enumerate_projective_plane(
    const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  std::vector<ProjectivePoint2> points;
  points.reserve(static_cast<std::size_t>(p) * p + p + 1);
  for (std::uint32_t b = 0; b < p; ++b)
    for (std::uint32_t c = 0; c < p; ++c)
      points.emplace_back(field, 1, b, c);
  for (std::uint32_t c = 0; c < p; ++c) points.emplace_back(field, 0, 1, c);
  points.emplace_back(field, 0, 0, 1);
  return points;
}

namespace {

// Value of a cubic with the given basis coefficients at (x0, x1, x2).
std::uint32_t cubic_value(const PrimeField& field, const CubicCoefficients& q,
                          std::uint32_t x0, std::uint32_t x1,
                          std::uint32_t x2) {
  std::array<std::array<std::uint32_t, 4>, 3> pw{};
  const std::array<std::uint32_t, 3> xs = {x0, x1, x2};
  for (int v = 0; v < 3; ++v) {
    pw[v][0] = 1;
    for (int e = 1; e <= 3; ++e) pw[v][e] = field.mul(pw[v][e - 1], xs[v]);
  }
  const auto& triples = cubic_exponent_triples();
  std::uint32_t sum = 0;
  for (std::size_t m = 0; m < triples.size(); ++m) {
    if (q[m] == 0) continue;
    std::uint32_t prod = field.mul(q[m], pw[0][triples[m][0]]);
    prod = field.mul(prod, pw[1][triples[m][1]]);
    prod = field.mul(prod, pw[2][triples[m][2]]);
    sum = field.add(sum, prod);
  }
  return sum;
}

template <typename Visitor>
void for_each_projective_point(const PrimeField& field, Visitor&& visit) {
  const std::uint32_t p = field.modulus();
  for (std::uint32_t b = 0; b < p; ++b)
    for (std::uint32_t c = 0; c < p; ++c) visit(1u, b, c);
  for (std::uint32_t c = 0; c < p; ++c) visit(0u, 1u, c);
  visit(0u, 0u, 1u);
}

using FpMat3 = std::array<std::array<std::uint32_t, 3>, 3>;

std::uint32_t fp_det3(const PrimeField& f, const FpMat3& m) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
  };
  std::uint32_t d = f.mul(m[0][0], minor(1, 2, 1, 2));
  d = f.sub(d, f.mul(m[0][1], minor(1, 2, 0, 2)));
  return f.add(d, f.mul(m[0][2], minor(1, 2, 0, 1)));
}

FpMat3 fp_inverse(const PrimeField& f, const FpMat3& m) {
  const std::uint32_t d = fp_det3(f, m);
  if (d == 0) throw Error("singular matrix over the prime field");
  const std::uint32_t dinv = f.inv(d);
  auto cof = [&](int i, int j) {
    const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
  };
  FpMat3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[j][i] = f.mul(cof(i, j), dinv);
  return inv;
}

FpMat3 fp_mul(const PrimeField& f, const FpMat3& a, const FpMat3& b) {
  FpMat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint32_t s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i][k], b[k][j]));
      out[i][j] = s;
    }
  return out;
}

// Invertible matrix whose first column is v; the other two columns are
// standard basis vectors chosen to keep the determinant nonzero.
FpMat3 fp_complete_to_basis(const PrimeField& f, const std::array<std::uint32_t, 3>& v) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      FpMat3 m{};
      for (int r = 0; r < 3; ++r) m[r][0] = v[r];
      m[i][1] = 1;
      m[j][2] = 1;
      if (fp_det3(f, m) != 0) return m;
    }
  throw Error("cannot complete a zero vector to a basis");
}

CubicCoefficients witness_alpha_residues() {
  // a300 = a111 = a030 = a003 = 1, the rest zero.
  return {1, 0, 0, 0, 1, 0, 1, 0, 0, 1};
}

}  // namespace

CubicCoefficients hessian_coefficients_mod_p(const PrimeField& field,
                                             const CubicCoefficients& alpha) {
  const FlexSystem& system = FlexSystem::instance();
  const FpPolynomial h = FpPolynomial::reduce(system.h(), field);
  const auto& triples = cubic_exponent_triples();
  auto slot_of = [&](int e0, int e1, int e2) -> std::size_t {
    for (std::size_t m = 0; m < triples.size(); ++m)
      if (triples[m][0] == e0 && triples[m][1] == e1 && triples[m][2] == e2)
        return m;
    throw Error("not a cubic monomial");
  };
  CubicCoefficients out{};
  for (const auto& [mono, coeff] : h.terms()) {
    std::uint32_t c = coeff;
    for (std::size_t j = 0; j < 10; ++j) {
      const int e = mono.exponent(3 + j);
      if (e > 0)
        c = field.mul(c, field.pow(alpha[j], static_cast<std::uint64_t>(e)));
    }
    if (c == 0) continue;
    const std::size_t slot =
        slot_of(mono.exponent(0), mono.exponent(1), mono.exponent(2));
    out[slot] = field.add(out[slot], c);
  }
  return out;
}

std::vector<ProjectivePoint2> flexes_of_cubic(const PrimeField& field,
                                              const CubicCoefficients& alpha) {
  if (std::all_of(alpha.begin(), alpha.end(),
                  [&](std::uint32_t a) { return a % field.modulus() == 0; }))
    throw Error("the zero cubic has no flex locus");
  const CubicCoefficients hess = hessian_coefficients_mod_p(field, alpha);
  std::vector<ProjectivePoint2> out;
  for_each_projective_point(field, [&](std::uint32_t a, std::uint32_t b,
                                       std::uint32_t c) {
    if (cubic_value(field, alpha, a, b, c) != 0) return;
    if (cubic_value(field, hess, a, b, c) != 0) return;
    out.emplace_back(field, a, b, c);
  });
  return out;
}

bool contains_projective_line(const PrimeField& field,
                              const std::vector<ProjectivePoint2>& points) {
  const std::uint32_t p = field.modulus();
  if (points.size() < static_cast<std::size_t>(p) + 1) return false;
  const std::set<ProjectivePoint2> set(points.begin(), points.end());
  std::set<std::array<std::uint32_t, 3>> seen_normals;
  auto on_line = [&](const std::array<std::uint32_t, 3>& n,
                     const ProjectivePoint2& q) {
    std::uint32_t s = 0;
    for (int i = 0; i < 3; ++i) s = field.add(s, field.mul(n[i], q.coords()[i]));
    return s == 0;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto& u = points[i].coords();
      const auto& v = points[j].coords();
      // normal = u x v, normalized as a projective triple
      std::array<std::uint32_t, 3> n = {
          field.sub(field.mul(u[1], v[2]), field.mul(u[2], v[1])),
          field.sub(field.mul(u[2], v[0]), field.mul(u[0], v[2])),
          field.sub(field.mul(u[0], v[1]), field.mul(u[1], v[0]))};
      if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;
      const ProjectivePoint2 norm(field, n[0], n[1], n[2]);
      if (!seen_normals.insert(norm.coords()).second) continue;
      std::size_t count = 0;
      for (const auto& q : set)
        if (on_line(norm.coords(), q)) ++count;
      if (count == static_cast<std::size_t>(p) + 1) return true;
    }
  }
  return false;
}

SurjectivityReport check_projection_surjectivity_to_PL(
    const PrimeField& field) {
  if (field.modulus() > 31)
    throw Error("surjectivity enumeration is limited to p <= 31");
  const FlexSystem& system = FlexSystem::instance();
  const FpPolynomial f_p = FpPolynomial::reduce(system.f(), field);
  const FpPolynomial h_p = FpPolynomial::reduce(system.h(), field);

  SurjectivityReport report;
  report.prime = field.modulus();

  const ProjectivePoint2 witness_x(field, 0, field.modulus() - 1, 1);
  const FpMat3 to_witness = fp_complete_to_basis(field, witness_x.coords());

  for (const ProjectivePoint2& e : enumerate_projective_plane(field)) {
    ++report.total;
    // A maps e to the witness x-point, so the transported point sits at e.
    const FpMat3 from_e = fp_complete_to_basis(field, e.coords());
    const FpMat3 a_fp = fp_mul(field, to_witness, fp_inverse(field, from_e));

    Mat3<Scalar> a_lift{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        a_lift[i][j] = Scalar(static_cast<long long>(a_fp[i][j]));

    const PointAssignment moved = system.transport_witness(a_lift);
    std::vector<std::uint32_t> residues(moved.values().size());
    for (std::size_t v = 0; v < residues.size(); ++v)
      residues[v] = field.reduce(moved.value(v));

    const ProjectivePoint2 reduced_x(field, residues[0], residues[1],
                                     residues[2]);
    const bool hit = reduced_x == e;
    const bool on_cone = f_p.evaluate(residues) == 0 && h_p.evaluate(residues) == 0;
    if (hit && on_cone) {
      ++report.covered;
      if (field.modulus() <= 13) {
        CubicCoefficients alpha{};
        for (std::size_t m = 0; m < 10; ++m) alpha[m] = residues[3 + m];
        report.exhibits.push_back({e, alpha});
      }
    } else {
      report.failures.push_back(e);
    }
  }
  return report;
}

CPointSampleReport sample_C_points(const PrimeField& field, std::size_t count,
                                   std::uint64_t seed) {
  if (count < 1) throw Error("sample size must be at least 1");
  const FlexSystem& system = FlexSystem::instance();
  const UniversePtr& universe = system.universe();
  const VariableGrouping& grouping = VariableGrouping::flex_bigrading();
  const FpPolynomial f_p = FpPolynomial::reduce(system.f(), field);
  const FpPolynomial h_p = FpPolynomial::reduce(system.h(), field);
  const std::uint32_t p = field.modulus();
  const auto& triples = cubic_exponent_triples();

  CPointSampleReport report;
  report.prime = p;
  report.seed = seed;

  auto make_point = [&](const std::array<std::uint32_t, 3>& xs,
                        const CubicCoefficients& alpha) {
    std::vector<Scalar> values(universe->size());
    for (std::size_t v = 0; v < 3; ++v)
      values[v] = Scalar(static_cast<long long>(xs[v]));
    for (std::size_t m = 0; m < 10; ++m)
      values[3 + m] = Scalar(static_cast<long long>(alpha[m]));
    return BlockPoint(grouping, PointAssignment(universe, std::move(values)));
  };

  // Point #0 is the reduction of the integral witness.
  report.points.push_back(
      make_point({0, p - 1, 1}, witness_alpha_residues()));

  SplitMix64 rng(seed);
  const std::uint32_t inv2 = field.inv(2);
  const std::uint32_t inv6 = field.inv(6);

  auto eval_h = [&](const std::array<std::uint32_t, 3>& xs,
                    const CubicCoefficients& alpha) {
    std::vector<std::uint32_t> values(universe->size());
    for (std::size_t v = 0; v < 3; ++v) values[v] = xs[v];
    for (std::size_t m = 0; m < 10; ++m) values[3 + m] = alpha[m];
    return h_p.evaluate(values);
  };

  int x_draws = 0;
  while (report.points.size() < count) {
    if (++x_draws > 512) throw Error("sampling exhaustion: no cone point found");

    std::array<std::uint32_t, 3> xs{};
    do {
      for (auto& x : xs) x = static_cast<std::uint32_t>(rng.below(p));
    } while (xs[0] == 0 && xs[1] == 0 && xs[2] == 0);

    // Values of the ten cubic monomials at x; f is linear in the
    // coefficients, so f = 0 is one linear equation with these weights.
    std::array<std::uint32_t, 10> weights{};
    for (std::size_t m = 0; m < 10; ++m)
      weights[m] = cubic_value(
          field, [&] { CubicCoefficients e{}; e[m] = 1; return e; }(), xs[0],
          xs[1], xs[2]);
    std::size_t pivot = 0;
    while (pivot < 10 && weights[pivot] == 0) ++pivot;
    if (pivot == 10) continue;  // cannot happen for nonzero x
    const std::uint32_t pivot_inv = field.inv(weights[pivot]);

    auto solve_kernel = [&](CubicCoefficients& a) {
      std::uint32_t rhs = 0;
      for (std::size_t m = 0; m < 10; ++m)
        if (m != pivot) rhs = field.add(rhs, field.mul(a[m], weights[m]));
      a[pivot] = field.mul(field.neg(rhs), pivot_inv);
    };

    bool accepted = false;
    for (int line = 0; line < 24 && !accepted; ++line) {
      CubicCoefficients base{}, dir{};
      for (std::size_t m = 0; m < 10; ++m) {
        if (m == pivot) continue;
        base[m] = static_cast<std::uint32_t>(rng.below(p));
        dir[m] = static_cast<std::uint32_t>(rng.below(p));
      }
      solve_kernel(base);
      solve_kernel(dir);
      if (std::all_of(dir.begin(), dir.end(),
                      [](std::uint32_t v) { return v == 0; })) continue;

      // h restricted to the line base + t*dir is a cubic in t; recover its
      // coefficients from the values at t = 0, 1, 2, 3.
      std::array<std::uint32_t, 4> hv{};
      for (std::uint32_t t = 0; t < 4; ++t) {
        CubicCoefficients a{};
        for (std::size_t m = 0; m < 10; ++m)
          a[m] = field.add(base[m], field.mul(t, dir[m]));
        hv[t] = eval_h(xs, a);
      }
      const std::uint32_t c0 = hv[0];
      auto combine = [&](long long k0, long long k1, long long k2,
                         long long k3) {
        const long long v = k0 * hv[0] + k1 * hv[1] + k2 * hv[2] + k3 * hv[3];
        return nonneg_mod(v, p);
      };
      const std::uint32_t c1 = field.mul(combine(-11, 18, -9, 2), inv6);
      const std::uint32_t c2 = field.mul(combine(2, -5, 4, -1), inv2);
      const std::uint32_t c3 = field.mul(combine(-1, 3, -3, 1), inv6);

      for (std::uint32_t t = 0; t < p; ++t) {
        std::uint32_t v = c3;
        v = field.add(field.mul(v, t), c2);
        v = field.add(field.mul(v, t), c1);
        v = field.add(field.mul(v, t), c0);
        if (v != 0) continue;
        CubicCoefficients alpha{};
        bool all_zero = true;
        for (std::size_t m = 0; m < 10; ++m) {
          alpha[m] = field.add(base[m], field.mul(t, dir[m]));
          all_zero = all_zero && alpha[m] == 0;
        }
        if (all_zero) continue;
        if (eval_h(xs, alpha) != 0)
          throw Error("interpolation mismatch in the coefficient line scan");
        BlockPoint point = make_point(xs, alpha);
        std::vector<std::uint32_t> residues(universe->size());
        for (std::size_t v2 = 0; v2 < residues.size(); ++v2)
          residues[v2] = field.reduce(point.assignment().value(v2));
        if (f_p.evaluate(residues) != 0)
          throw Error("kernel solve failed in the coefficient line scan");
        report.points.push_back(std::move(point));
        accepted = true;
        break;
      }
      if (!accepted) ++report.line_retries;
    }
  }
  return report;
}

FlexFrequencyReport scan_random_cubics(const PrimeField& field,
                                       std::size_t count, std::uint64_t seed) {
  FlexFrequencyReport report;
  report.prime = field.modulus();
  report.seed = seed;
  report.cubic_count = count;
  SplitMix64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    CubicCoefficients alpha{};
    bool all_zero = true;
    do {
      for (auto& a : alpha) a = static_cast<std::uint32_t>(rng.below(field.modulus()));
      all_zero = std::all_of(alpha.begin(), alpha.end(),
                             [](std::uint32_t v) { return v == 0; });
    } while (all_zero);
    const std::size_t flex_count = flexes_of_cubic(field, alpha).size();
    ++report.histogram[flex_count];
    if (flex_count == 0) ++report.empty_count;
  }
  return report;
}

std::string SurjectivityReport::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["prime"] = prime;
  doc["check"] = "surjectivity-onto-PL";
  doc["coverage"] = std::to_string(covered) + "/" + std::to_string(total);
  auto& fails = doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& e : failures) fails.push_back(e.to_string());
  doc["seed"] = nullptr;  // exhaustive enumeration, nothing sampled
  auto& shows = doc["exhibits"] = nlohmann::ordered_json::array();
  for (const auto& ex : exhibits) {
    nlohmann::ordered_json row;
    row["point"] = ex.point.to_string();
    row["alpha"] = ex.alpha;
    shows.push_back(std::move(row));
  }
  doc["complete"] = complete();
  return doc.dump(2);
}

std::string CPointSampleReport::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["prime"] = prime;
  doc["check"] = "sample-C-points";
  doc["coverage"] =
      std::to_string(points.size()) + "/" + std::to_string(points.size());
  doc["failures"] = nlohmann::ordered_json::array();
  doc["seed"] = seed;
  auto& pts = doc["points"] = nlohmann::ordered_json::array();
  for (const BlockPoint& bp : points) {
    nlohmann::ordered_json row;
    const auto& u = *bp.assignment().universe();
    for (std::size_t v = 0; v < u.size(); ++v)
      row[u.name(v)] = bp.assignment().value(v).to_string();
    pts.push_back(std::move(row));
  }
  doc["line_retries"] = line_retries;
  return doc.dump(2);
}

std::string FlexFrequencyReport::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["prime"] = prime;
  doc["check"] = "flex-scan-random-cubics";
  doc["coverage"] = std::to_string(cubic_count) + " cubics scanned";
  doc["failures"] = nlohmann::ordered_json::array();
  doc["seed"] = seed;
  doc["cubics"] = cubic_count;
  doc["empty"] = empty_count;
  auto& hist = doc["histogram"] = nlohmann::ordered_json::object();
  for (const auto& [flexes, cubics] : histogram)
    hist[std::to_string(flexes)] = cubics;
  return doc.dump(2);
}

}  // namespace flexcore
