#include "flexcore/flex_variety.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "flexcore/errors.hpp"

namespace flexcore {

namespace {

std::string index_label(const std::vector<std::size_t>& index) {
  std::string s = "(";
  for (const std::size_t i : index) s += static_cast<char>('0' + i);
  return s + ")";
}

std::vector<std::size_t> sorted_index(std::vector<std::size_t> index) {
  std::sort(index.begin(), index.end());
  return index;
}

}  // namespace

const std::array<std::array<int, 3>, 10>& cubic_exponent_triples() {
  static const std::array<std::array<int, 3>, 10> triples = {{{3, 0, 0},
                                                              {2, 1, 0},
                                                              {2, 0, 1},
                                                              {1, 2, 0},
                                                              {1, 1, 1},
                                                              {1, 0, 2},
                                                              {0, 3, 0},
                                                              {0, 2, 1},
                                                              {0, 1, 2},
                                                              {0, 0, 3}}};
  return triples;
}

Polynomial universal_cubic() {
  const UniversePtr& u = VariableUniverse::flex();
  std::vector<Term> terms;
  const auto& triples = cubic_exponent_triples();
  for (std::size_t m = 0; m < triples.size(); ++m) {
    Monomial mono(u->size());
    mono.set_exponent(0, triples[m][0]);
    mono.set_exponent(1, triples[m][1]);
    mono.set_exponent(2, triples[m][2]);
    mono.set_exponent(3 + m, 1);
    terms.push_back({std::move(mono), Scalar(1)});
  }
  return Polynomial::from_terms(u, std::move(terms));
}

Polynomial universal_cubic_hessian() {
  const Polynomial f = universal_cubic();
  auto second = [&](std::size_t i, std::size_t j) { return diff(diff(f, i), j); };
  const Mat3<Polynomial> hessian = {{{second(0, 0), second(0, 1), second(0, 2)},
                                     {second(1, 0), second(1, 1), second(1, 2)},
                                     {second(2, 0), second(2, 1), second(2, 2)}}};
  return det3(hessian);
}

FlexSystem::FlexSystem()
    : universe_(VariableUniverse::flex()),
      f_(universal_cubic()),
      h_(universal_cubic_hessian()),
      h_partials_{Polynomial(universe_), Polynomial(universe_),
                  Polynomial(universe_)} {
  for (std::size_t i = 0; i < 3; ++i) {
    const Polynomial di = diff(f_, i);
    f_partials_.emplace(std::vector<std::size_t>{i}, di);
    for (std::size_t j = i; j < 3; ++j) {
      const Polynomial dij = diff(di, j);
      f_partials_.emplace(std::vector<std::size_t>{i, j}, dij);
      for (std::size_t l = j; l < 3; ++l)
        f_partials_.emplace(std::vector<std::size_t>{i, j, l}, diff(dij, l));
    }
    h_partials_[i] = diff(h_, i);
  }
}

const FlexSystem& FlexSystem::instance() {
  static const FlexSystem system;
  return system;
}

const VariableGrouping& FlexSystem::bigrading() const {
  return VariableGrouping::flex_bigrading();
}

const Polynomial& FlexSystem::f_partial(std::vector<std::size_t> index) const {
  const auto it = f_partials_.find(sorted_index(std::move(index)));
  if (it == f_partials_.end()) throw Error("derivative index out of range");
  return it->second;
}

const Polynomial& FlexSystem::h_partial(std::size_t i) const {
  return h_partials_.at(i);
}

Polynomial FlexSystem::h_partial_expanded(std::size_t i) const {
  if (i > 2) throw Error("derivative index out of range");
  auto d2 = [&](std::size_t a, std::size_t b) -> const Polynomial& {
    return f_partial({a, b});
  };
  auto d3 = [&](std::size_t a, std::size_t b) -> const Polynomial& {
    return f_partial({i, a, b});
  };
  const Scalar two(2);
  Polynomial out = d3(0, 0) * d2(1, 1) * d2(2, 2);
  out += d2(0, 0) * d3(1, 1) * d2(2, 2);
  out += d2(0, 0) * d2(1, 1) * d3(2, 2);
  out += two * (d3(0, 1) * d2(1, 2) * d2(0, 2));
  out += two * (d2(0, 1) * d3(1, 2) * d2(0, 2));
  out += two * (d2(0, 1) * d2(1, 2) * d3(0, 2));
  out -= two * (d2(0, 2) * d3(0, 2) * d2(1, 1));
  out -= d2(0, 2) * d2(0, 2) * d3(1, 1);
  out -= two * (d2(1, 2) * d3(1, 2) * d2(0, 0));
  out -= d2(1, 2) * d2(1, 2) * d3(0, 0);
  out -= two * (d2(0, 1) * d3(0, 1) * d2(2, 2));
  out -= d2(0, 1) * d2(0, 1) * d3(2, 2);
  return out;
}

std::vector<DerivativeTableRow> FlexSystem::derivative_table(int order) const {
  std::vector<DerivativeTableRow> rows;
  for (const auto& [index, value] : f_partials_)
    if (static_cast<int>(index.size()) == order)
      rows.push_back({index, value});
  if (rows.empty()) throw Error("derivative order must be 1, 2 or 3");
  return rows;
}

std::map<std::vector<std::size_t>, Scalar> FlexSystem::table_values_at_witness(
    int order) const {
  const PointAssignment c = witness();
  std::map<std::vector<std::size_t>, Scalar> out;
  for (const auto& row : derivative_table(order))
    out.emplace(row.index, row.value.evaluate(c));
  return out;
}

const std::map<std::vector<std::size_t>, long long>&
FlexSystem::published_table_values(int order) {
  using Table = std::map<std::vector<std::size_t>, long long>;
  static const Table order1 = {{{0}, -1}, {{1}, 3}, {{2}, 3}};
  static const Table order2 = {{{0, 0}, 0}, {{0, 1}, 1},  {{0, 2}, -1},
                               {{1, 1}, -6}, {{1, 2}, 0}, {{2, 2}, 6}};
  static const Table order3 = {
      {{0, 0, 0}, 6}, {{0, 0, 1}, 0}, {{0, 0, 2}, 0}, {{0, 1, 1}, 0},
      {{0, 1, 2}, 1}, {{0, 2, 2}, 0}, {{1, 1, 1}, 6}, {{1, 1, 2}, 0},
      {{1, 2, 2}, 0}, {{2, 2, 2}, 6}};
  switch (order) {
    case 1: return order1;
    case 2: return order2;
    case 3: return order3;
    default: throw Error("derivative order must be 1, 2 or 3");
  }
}

PointAssignment FlexSystem::witness() const {
  std::vector<Scalar> values(universe_->size(), Scalar(0));
  values[0] = Scalar(0);
  values[1] = Scalar(-1);
  values[2] = Scalar(1);
  const auto a300 = *universe_->find("a300");
  const auto a111 = *universe_->find("a111");
  const auto a030 = *universe_->find("a030");
  const auto a003 = *universe_->find("a003");
  values[a300] = values[a111] = values[a030] = values[a003] = Scalar(1);
  return PointAssignment(universe_, std::move(values));
}

Polynomial FlexSystem::witness_cubic() const {
  auto x = [&](std::size_t i) { return Polynomial::variable(universe_, i); };
  return x(0).pow(3) + x(1).pow(3) + x(2).pow(3) + x(0) * x(1) * x(2);
}

Scalar FlexSystem::jacobian_minor(const PointAssignment& point,
                                  std::size_t col_i, std::size_t col_j) const {
  const Scalar fi = f_partial({col_i}).evaluate(point);
  const Scalar fj = f_partial({col_j}).evaluate(point);
  const Scalar hi = h_partial(col_i).evaluate(point);
  const Scalar hj = h_partial(col_j).evaluate(point);
  return fi * hj - fj * hi;
}

MultiConeSystem FlexSystem::cone() const {
  return MultiConeSystem(bigrading(), {f_, h_});
}

PointAssignment FlexSystem::transport_witness(const Mat3<Scalar>& A) const {
  const Mat3<Scalar> inv = mat3_inverse(A);  // throws when singular

  // x -> A.x in the witness cubic, then re-read its ten coefficients.
  SubstitutionMap images;
  for (std::size_t j = 0; j < 3; ++j) {
    Polynomial image(universe_);
    for (std::size_t k = 0; k < 3; ++k)
      image += A[j][k] * Polynomial::variable(universe_, k);
    images.emplace(j, std::move(image));
  }
  const Polynomial moved_cubic = substitute(witness_cubic(), images);

  std::vector<Scalar> values(universe_->size(), Scalar(0));
  const auto& triples = cubic_exponent_triples();
  for (std::size_t m = 0; m < triples.size(); ++m) {
    Monomial mono(universe_->size());
    mono.set_exponent(0, triples[m][0]);
    mono.set_exponent(1, triples[m][1]);
    mono.set_exponent(2, triples[m][2]);
    values[3 + m] = moved_cubic.coefficient(mono);
  }

  const std::array<Scalar, 3> moved_x =
      mat3_apply(inv, {Scalar(0), Scalar(-1), Scalar(1)});
  for (std::size_t j = 0; j < 3; ++j) values[j] = moved_x[j];

  PointAssignment point(universe_, std::move(values));
  if (!f_.evaluate(point).is_zero() || !h_.evaluate(point).is_zero())
    throw Error("transported witness left the cone");  // unreachable
  return point;
}

CertificateReport FlexSystem::verify_certificate(bool corrupt_witness) const {
  CertificateReport report;
  auto add = [&report](std::string id, std::string ref, std::string expected,
                       std::string computed, bool pass) {
    report.checks.push_back({std::move(id), std::move(ref),
                             std::move(expected), std::move(computed), pass});
  };

  PointAssignment c = witness();
  if (corrupt_witness) c = c.with(1, Scalar(1));

  // 1. Shape of f and the bidegrees of f and h.
  {
    bool unit = f_.term_count() == 10;
    for (const Term& t : f_.terms()) unit = unit && t.coefficient.is_one();
    add("f.terms", "Eq. (1)", "10 terms, all coefficients 1",
        std::to_string(f_.term_count()) + " terms" +
            (unit ? ", all coefficients 1" : ", non-unit coefficient present"),
        unit);
  }
  const auto& grading = bigrading();
  const auto deg_f = multidegree(f_, grading);
  const auto deg_h = multidegree(h_, grading);
  const bool f_deg_ok = std::holds_alternative<MultiDegree>(deg_f) &&
                        std::get<MultiDegree>(deg_f) == MultiDegree({3, 1});
  const bool h_deg_ok = std::holds_alternative<MultiDegree>(deg_h) &&
                        std::get<MultiDegree>(deg_h) == MultiDegree({3, 3});
  add("f.bidegree", "Eq. (3)", "internal (3, 1); paper pair (1, 3)",
      std::holds_alternative<MultiDegree>(deg_f)
          ? "internal " + std::get<MultiDegree>(deg_f).to_string()
          : "not bi-homogeneous",
      f_deg_ok);
  add("h.bidegree", "Eq. (3)", "internal (3, 3); paper pair (3, 3)",
      std::holds_alternative<MultiDegree>(deg_h)
          ? "internal " + std::get<MultiDegree>(deg_h).to_string()
          : "not bi-homogeneous",
      h_deg_ok);

  // 2. Positivity of every block degree (the multi-cone hypothesis).
  {
    const bool positive = f_deg_ok && h_deg_ok &&
                          std::get<MultiDegree>(deg_f).all_positive() &&
                          std::get<MultiDegree>(deg_h).all_positive();
    add("eq9.positivity", "Eq. (9)", "every block degree of f and h positive",
        positive ? "all positive" : "violated", positive);
  }

  // Cofactor display for h (used again by the Eq. (21) expansion).
  {
    auto d2 = [&](std::size_t a, std::size_t b) -> const Polynomial& {
      return f_partial({a, b});
    };
    Polynomial display = d2(0, 0) * d2(1, 1) * d2(2, 2);
    display += Scalar(2) * (d2(0, 1) * d2(1, 2) * d2(0, 2));
    display -= d2(0, 2) * d2(0, 2) * d2(1, 1);
    display -= d2(1, 2) * d2(1, 2) * d2(0, 0);
    display -= d2(0, 1) * d2(0, 1) * d2(2, 2);
    const bool same = display == h_;
    add("h.cofactor-expansion", "display before Eq. (21)",
        "h equals its five-product cofactor form", same ? "equal" : "differs",
        same);
  }

  // 3. Witness membership.
  {
    const Scalar fc = f_.evaluate(c);
    const Scalar hc = h_.evaluate(c);
    add("witness.f", "Eq. (4), Eq. (14)", "0", fc.to_string(), fc.is_zero());
    add("witness.h", "Eq. (4), Eq. (14)", "0", hc.to_string(), hc.is_zero());
  }

  // 4. Derivative tables at the witness.
  for (int order = 1; order <= 3; ++order) {
    const char* ref = order == 1 ? "Eq. (18)" : order == 2 ? "Eq. (19)"
                                                           : "Eq. (20)";
    const auto& expected = published_table_values(order);
    for (const auto& row : derivative_table(order)) {
      const Scalar value = row.value.evaluate(c);
      const long long want = expected.at(row.index);
      add("table" + std::to_string(order) + ".f_" + index_label(row.index),
          ref, std::to_string(want), value.to_string(),
          value == Scalar(want));
    }
  }

  // 5. The twelve-product expansion against direct differentiation.
  for (std::size_t i = 0; i < 3; ++i) {
    const bool same = h_partial_expanded(i) == h_partial(i);
    add("eq21.identity." + std::to_string(i), "Eq. (21)",
        "expansion equals dh/dx" + std::to_string(i) + " symbolically",
        same ? "equal" : "differs", same);
  }

  // 6. First partials of h at the witness, both routes.
  {
    const long long expected_h[3] = {-218, -18, -18};
    const char* refs[3] = {"Eq. (22)", "Eq. (22)",
                           "derived; both routes must agree"};
    for (std::size_t i = 0; i < 3; ++i) {
      const Scalar direct = h_partial(i).evaluate(c);
      const Scalar expansion = h_partial_expanded(i).evaluate(c);
      const bool ok =
          direct == Scalar(expected_h[i]) && expansion == direct;
      add((i < 2 ? "eq22.h_(" : "derived.h_(") + std::to_string(i) + ")(c)",
          refs[i], std::to_string(expected_h[i]),
          "direct " + direct.to_string() + "; expansion " +
              expansion.to_string(),
          ok);
    }
  }

  // 7. The 2x2 Jacobian minors; only the (x0,x1) one must be nonzero.
  {
    const Scalar m01 = jacobian_minor(c, 0, 1);
    const Scalar m02 = jacobian_minor(c, 0, 2);
    const Scalar m12 = jacobian_minor(c, 1, 2);
    report.jacobian_minor = m01.to_string();
    add("minor.(01)", "derived from Eqs. (18), (22)", "672 (nonzero)",
        m01.to_string(), m01 == Scalar(672) && !m01.is_zero());
    add("derived.minor.(02)", "diagnostic", "672", m02.to_string(),
        m02 == Scalar(672));
    add("derived.minor.(12)", "diagnostic", "0", m12.to_string(),
        m12 == Scalar(0));
  }

  report.assumptions = {
      "irreducibility of the flex variety and its dimension (9) are imported "
      "inputs; they are not machine-checked here",
      "ideal-membership over the whole cone is only sampled empirically; see "
      "the isotypic-vanishing reports",
      "primality of the ideal (f, h) is not claimed by this report; only the "
      "smoothness-certificate hypotheses are checked"};

  report.verdict = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CertificateCheck& ck) { return ck.pass; });
  return report;
}

std::string CertificateReport::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["report"] = "flex-variety-certificate";
  auto& rows = doc["checks"] = nlohmann::ordered_json::array();
  for (const CertificateCheck& ck : checks) {
    nlohmann::ordered_json row;
    row["id"] = ck.id;
    row["paper_ref"] = ck.paper_ref;
    row["expected"] = ck.expected;
    row["computed"] = ck.computed;
    row["pass"] = ck.pass;
    rows.push_back(std::move(row));
  }
  doc["assumptions"] = assumptions;
  doc["jacobian_minor"] = jacobian_minor;
  doc["verdict"] = verdict ? "pass" : "fail";
  return doc.dump(2);
}

std::string CertificateReport::to_text() const {
  std::ostringstream os;
  for (const CertificateCheck& ck : checks) {
    os << (ck.pass ? "[ok]   " : "[FAIL] ") << ck.id << "  [" << ck.paper_ref
       << "]\n       expected: " << ck.expected
       << "\n       computed: " << ck.computed << "\n";
  }
  os << "assumptions:\n";
  for (const std::string& a : assumptions) os << "  - " << a << "\n";
  os << "jacobian minor (x0,x1): " << jacobian_minor << "\n";
  os << "verdict: " << (verdict ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace flexcore
