#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "flexcore/errors.hpp"
#include "flexcore/fflab.hpp"
#include "flexcore/flex_variety.hpp"
#include "flexcore/parser.hpp"

#include "support.hpp"

using flexcore::CubicCoefficients;
using flexcore::FlexSystem;
using flexcore::FpPolynomial;
using flexcore::Polynomial;
using flexcore::PrimeField;
using flexcore::ProjectivePoint2;
using flexcore::Scalar;
using flexcore::SplitMix64;
using flexcore::VariableUniverse;

namespace {

const CubicCoefficients fermat = {1, 0, 0, 0, 0, 0, 1, 0, 0, 1};
const CubicCoefficients witness_cubic = {1, 0, 0, 0, 1, 0, 1, 0, 0, 1};

std::vector<std::uint32_t> residues_of(const PrimeField& field,
                                       const flexcore::PointAssignment& a) {
  std::vector<std::uint32_t> out(a.values().size());
  for (std::size_t v = 0; v < out.size(); ++v)
    out[v] = field.reduce(a.value(v));
  return out;
}

}  // namespace

TEST_CASE("the modulus must be a prime in (3, 65521]") {
  for (const std::uint32_t bad : {0u, 1u, 2u, 3u, 4u, 6u, 9u, 65522u, 65536u})
    CHECK_THROWS_AS(PrimeField(bad), flexcore::Error);
  CHECK_NOTHROW(PrimeField(5));
  CHECK_NOTHROW(PrimeField(7));
  CHECK_NOTHROW(PrimeField(65521));
}

TEST_CASE("field arithmetic basics") {
  const PrimeField f7(7);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.pow(3, 6) == 1);  // Fermat
  CHECK_THROWS_AS(f7.inv(0), flexcore::Error);

  CHECK(f7.reduce(Scalar(-1)) == 6);
  CHECK(f7.reduce(Scalar(1, 2)) == 4);  // 2 * 4 = 8 = 1 mod 7
  CHECK_THROWS_AS(f7.reduce(Scalar(1, 7)), flexcore::Error);
  CHECK(f7.reduce(flexcore::BigInt(-15)) == 6);
}

TEST_CASE("reduction commutes with ring operations and differentiation") {
  SplitMix64 rng(1009);
  for (const std::uint32_t p : {7u, 13u, 101u, 10007u}) {
    const PrimeField field(p);
    for (int k = 0; k < 100; ++k) {
      const auto u = testsupport::random_universe(rng);
      const Polynomial a = testsupport::random_polynomial(rng, u);
      const Polynomial b = testsupport::random_polynomial(rng, u);
      const FpPolynomial ra = flexcore::reduce_mod_p(a, field);
      const FpPolynomial rb = flexcore::reduce_mod_p(b, field);
      CHECK(flexcore::reduce_mod_p(a + b, field) == ra.add(rb));
      CHECK(flexcore::reduce_mod_p(a * b, field) == ra.mul(rb));
      const auto v = static_cast<std::size_t>(rng.below(u->size()));
      CHECK(flexcore::reduce_mod_p(flexcore::diff(a, v), field) == ra.diff(v));
    }
  }
}

TEST_CASE("the reduced witness annihilates the reduced generators") {
  const auto& system = FlexSystem::instance();
  for (const std::uint32_t p : {7u, 13u, 101u}) {
    const PrimeField field(p);
    const auto values = residues_of(field, system.witness());
    CHECK(flexcore::reduce_mod_p(system.f(), field).evaluate(values) == 0);
    CHECK(flexcore::reduce_mod_p(system.h(), field).evaluate(values) == 0);
  }
}

TEST_CASE("projective points normalize to a leading one") {
  const PrimeField f13(13);
  const ProjectivePoint2 a(f13, 0, 12, 1);
  CHECK(a.coords() == std::array<std::uint32_t, 3>{0, 1, 12});
  CHECK(a.to_string() == "(0:1:12)");
  const ProjectivePoint2 b(f13, 0, 1, 12);
  CHECK(a == b);
  CHECK_THROWS_AS(ProjectivePoint2(f13, 0, 0, 0), flexcore::Error);

  const auto plane = flexcore::enumerate_projective_plane(f13);
  CHECK(plane.size() == 183);  // 13^2 + 13 + 1
  const std::set<ProjectivePoint2> unique(plane.begin(), plane.end());
  CHECK(unique.size() == plane.size());
}

TEST_CASE("hessian coefficients agree with an independent Fp route") {
  // route 1: specializing the expanded integral Hessian
  // route 2: determinant of second partials computed entirely in F_p
  SplitMix64 rng(606);
  const auto& system = FlexSystem::instance();
  const auto& u = VariableUniverse::flex();
  for (const std::uint32_t p : {7u, 101u}) {
    const PrimeField field(p);
    const FpPolynomial f_p = flexcore::reduce_mod_p(system.f(), field);
    for (int k = 0; k < 10; ++k) {
      CubicCoefficients alpha{};
      for (auto& a : alpha) a = static_cast<std::uint32_t>(rng.below(p));
      if (std::all_of(alpha.begin(), alpha.end(),
                      [](std::uint32_t v) { return v == 0; }))
        alpha[0] = 1;
      const CubicCoefficients route1 =
          flexcore::hessian_coefficients_mod_p(field, alpha);

      std::map<std::size_t, std::uint32_t> alpha_map;
      for (std::size_t m = 0; m < 10; ++m) alpha_map[3 + m] = alpha[m];
      const FpPolynomial cubic = f_p.specialize(alpha_map);
      const FpPolynomial h00 = cubic.diff(0).diff(0);
      const FpPolynomial h01 = cubic.diff(0).diff(1);
      const FpPolynomial h02 = cubic.diff(0).diff(2);
      const FpPolynomial h11 = cubic.diff(1).diff(1);
      const FpPolynomial h12 = cubic.diff(1).diff(2);
      const FpPolynomial h22 = cubic.diff(2).diff(2);
      FpPolynomial det = h00.mul(h11.mul(h22));
      det = det.add(h01.mul(h12.mul(h02)));
      det = det.add(h01.mul(h12.mul(h02)));
      // subtract the three square terms: x - y = x + (-1)*y
      const FpPolynomial neg1 =
          flexcore::reduce_mod_p(Polynomial(u, Scalar(-1)), field);
      det = det.add(neg1.mul(h02.mul(h02).mul(h11)));
      det = det.add(neg1.mul(h12.mul(h12).mul(h00)));
      det = det.add(neg1.mul(h01.mul(h01).mul(h22)));

      // read the ten coefficients of route 2
      CubicCoefficients route2{};
      const auto& triples = flexcore::cubic_exponent_triples();
      for (const auto& [mono, coeff] : det.terms()) {
        for (std::size_t m = 0; m < 10; ++m)
          if (mono.exponent(0) == triples[m][0] &&
              mono.exponent(1) == triples[m][1] &&
              mono.exponent(2) == triples[m][2])
            route2[m] = coeff;
      }
      CHECK(route1 == route2);
    }
  }
}

TEST_CASE("flexes of the Fermat cubic mod 7") {
  const PrimeField field(7);
  const auto flexes = flexcore::flexes_of_cubic(field, fermat);
  CHECK(flexes.size() == 9);
  // every flex satisfies both equations and lies on the Hessian lines
  for (const auto& pt : flexes) {
    const auto [a, b, c] = std::array<std::uint32_t, 3>{
        pt.coords()[0], pt.coords()[1], pt.coords()[2]};
    const std::uint32_t cubes =
        field.add(field.add(field.pow(a, 3), field.pow(b, 3)), field.pow(c, 3));
    CHECK(cubes == 0);
    CHECK(field.mul(a, field.mul(b, c)) == 0);  // Hessian 216 x0 x1 x2
  }
  // includes the reduction of (0 : -1 : 1)
  CHECK(std::count(flexes.begin(), flexes.end(), ProjectivePoint2(field, 0, 6, 1)) == 1);
}

TEST_CASE("flexes of the witness cubic mod 13 include the reduced witness") {
  const PrimeField field(13);
  const auto flexes = flexcore::flexes_of_cubic(field, witness_cubic);
  CHECK_FALSE(flexes.empty());
  CHECK(std::count(flexes.begin(), flexes.end(),
                   ProjectivePoint2(field, 0, 12, 1)) == 1);
  CHECK(flexes.size() <= 9);  // the witness cubic is smooth
}

TEST_CASE("the zero cubic is rejected") {
  const PrimeField field(7);
  CHECK_THROWS_AS(flexcore::flexes_of_cubic(field, CubicCoefficients{}),
                  flexcore::Error);
}

TEST_CASE("smooth cubics have at most nine rational flexes") {
  SplitMix64 rng(90);
  for (const std::uint32_t p : {7u, 13u}) {
    const PrimeField field(p);
    int checked = 0;
    for (int k = 0; k < 40 && checked < 10; ++k) {
      CubicCoefficients alpha{};
      for (auto& a : alpha) a = static_cast<std::uint32_t>(rng.below(p));
      if (std::all_of(alpha.begin(), alpha.end(),
                      [](std::uint32_t v) { return v == 0; }))
        continue;
      const auto flexes = flexcore::flexes_of_cubic(field, alpha);
      if (flexcore::contains_projective_line(field, flexes)) continue;
      CHECK(flexes.size() <= 9);
      ++checked;
    }
    CHECK(checked >= 5);
  }
}

TEST_CASE("a cube of a line has a full line of flexes") {
  const PrimeField field(7);
  CubicCoefficients triple_line{};  // x0^3
  triple_line[0] = 1;
  const auto flexes = flexcore::flexes_of_cubic(field, triple_line);
  CHECK(flexes.size() == 8);  // the line x0 = 0 has p + 1 points
  CHECK(flexcore::contains_projective_line(field, flexes));
}

TEST_CASE("constructive surjectivity onto the plane") {
  for (const std::uint32_t p : {7u, 13u}) {
    const PrimeField field(p);
    const auto report = flexcore::check_projection_surjectivity_to_PL(field);
    CHECK(report.total == p * p + p + 1);
    CHECK(report.covered == report.total);
    CHECK(report.failures.empty());
    CHECK(report.complete());
    CHECK(report.exhibits.size() == report.total);
    // spot check one exhibit: its cubic really has a flex at its point
    const auto& ex = report.exhibits.front();
    const auto flexes = flexcore::flexes_of_cubic(field, ex.alpha);
    CHECK(std::count(flexes.begin(), flexes.end(), ex.point) == 1);
  }
  CHECK_THROWS_AS(
      flexcore::check_projection_surjectivity_to_PL(PrimeField(37)),
      flexcore::Error);
}

TEST_CASE("cone-point sampling is deterministic and sound") {
  const PrimeField field(10007);
  const auto a = flexcore::sample_C_points(field, 8, 42);
  const auto b = flexcore::sample_C_points(field, 8, 42);
  const auto other = flexcore::sample_C_points(field, 8, 43);
  REQUIRE(a.points.size() == 8);
  REQUIRE(b.points.size() == 8);
  bool identical = true, different = false;
  for (std::size_t i = 0; i < 8; ++i) {
    identical = identical && a.points[i].assignment().values() ==
                                 b.points[i].assignment().values();
    different = different || a.points[i].assignment().values() !=
                                 other.points[i].assignment().values();
  }
  CHECK(identical);
  CHECK(different);

  const auto& system = FlexSystem::instance();
  const FpPolynomial f_p = flexcore::reduce_mod_p(system.f(), field);
  const FpPolynomial h_p = flexcore::reduce_mod_p(system.h(), field);
  for (const auto& point : a.points) {
    const auto values = residues_of(field, point.assignment());
    CHECK(f_p.evaluate(values) == 0);
    CHECK(h_p.evaluate(values) == 0);
    CHECK(point.in_open_part());
  }

  // point #0 is the reduced integral witness
  const auto w = residues_of(field, system.witness());
  CHECK(residues_of(field, a.points[0].assignment()) == w);

  CHECK_THROWS_AS(flexcore::sample_C_points(field, 0, 1), flexcore::Error);
}

TEST_CASE("random-cubic scans report empties instead of failing") {
  const PrimeField field(13);
  const auto report = flexcore::scan_random_cubics(field, 50, 7);
  CHECK(report.cubic_count == 50);
  std::size_t total = 0;
  for (const auto& [flexes, cubics] : report.histogram) total += cubics;
  CHECK(total == 50);
  CHECK(report.histogram.count(0) == (report.empty_count > 0 ? 1 : 0));
  const auto again = flexcore::scan_random_cubics(field, 50, 7);
  CHECK(again.empty_count == report.empty_count);
  CHECK(again.histogram == report.histogram);
}

TEST_CASE("reports serialize with the common header fields") {
  const PrimeField field(7);
  const auto surjectivity = flexcore::check_projection_surjectivity_to_PL(field);
  const auto doc = nlohmann::json::parse(surjectivity.to_json_string());
  CHECK(doc["prime"] == 7);
  CHECK(doc["check"] == "surjectivity-onto-PL");
  CHECK(doc["coverage"] == "57/57");
  CHECK(doc["failures"].empty());

  const auto sample = flexcore::sample_C_points(field, 3, 9);
  const auto sdoc = nlohmann::json::parse(sample.to_json_string());
  CHECK(sdoc["prime"] == 7);
  CHECK(sdoc["seed"] == 9);
  CHECK(sdoc["points"].size() == 3);
}
