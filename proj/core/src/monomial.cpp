#include "flexcore/monomial.hpp"

#include <numeric>
#include <sstream>

#include "flexcore/errors.hpp"

namespace flexcore {

namespace {
constexpr int max_exponent = 255;
}

Monomial::Monomial(std::size_t nvars) {
  if (nvars == 0 || nvars > VariableUniverse::max_size)
    throw Error("monomial arity out of range");
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, int exponent) {
  Monomial m(nvars);
  m.set_exponent(var, exponent);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i)
    m.set_exponent(i, exponents[i]);
  return m;
}

int Monomial::exponent(std::size_t var) const {
  if (var >= size_) throw Error("variable index outside the monomial");
  return exp_[var];
}

void Monomial::set_exponent(std::size_t var, int exponent) {
  if (var >= size_) throw Error("variable index outside the monomial");
  if (exponent < 0 || exponent > max_exponent)
    throw Error("exponent out of range: " + std::to_string(exponent));
  exp_[var] = static_cast<std::uint8_t>(exponent);
}

int Monomial::total_degree() const {
  return std::accumulate(exp_.begin(), exp_.begin() + size_, 0);
}

Monomial Monomial::times(const Monomial& other) const {
  if (size_ != other.size_) throw Error("monomial arity mismatch");
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    const int e = exp_[i] + other.exp_[i];
    if (e > max_exponent) throw Error("exponent overflow in product");
    out.exp_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial Monomial::widened(std::size_t nvars) const {
  if (nvars < size_) throw Error("cannot widen to a smaller universe");
  Monomial out(nvars);
  for (std::size_t i = 0; i < size_; ++i) out.exp_[i] = exp_[i];
  return out;
}

std::strong_ordering Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) throw Error("comparing monomials of different arity");
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size_; ++i)
    if (a.exp_[i] != b.exp_[i]) return a.exp_[i] <=> b.exp_[i];
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const VariableUniverse& universe) const {
  if (universe.size() != size_)
    throw Error("monomial printed against the wrong universe");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] == 0) continue;
    if (!first) os << "*";
    os << universe.name(i);
    if (exp_[i] > 1) os << "^" << int{exp_[i]};
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace flexcore
