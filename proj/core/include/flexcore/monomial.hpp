#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "flexcore/variables.hpp"

namespace flexcore {

/// Dense exponent vector over a universe of at most 16 variables.
/// The canonical order is graded lexicographic: total degree first, then
/// lexicographic with variable 0 strongest.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t var, int exponent = 1);
  static Monomial from_exponents(std::span<const int> exponents);

  std::size_t nvars() const { return size_; }
  int exponent(std::size_t var) const;
  void set_exponent(std::size_t var, int exponent);
  int total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  // Exponent-wise sum, i.e. the product of the monomials.
  Monomial times(const Monomial& other) const;
  // Re-tag to a wider universe; the new exponents are zero.
  Monomial widened(std::size_t nvars) const;

  static std::strong_ordering compare(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    return compare(a, b);
  }

  // "x0^2*x1" against the given universe; "1" for the constant monomial.
  std::string to_string(const VariableUniverse& universe) const;

 private:
  std::array<std::uint8_t, VariableUniverse::max_size> exp_{};
  std::uint8_t size_ = 0;
};

}  // namespace flexcore
