#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tw/integer.hpp"

namespace tw {

// Exponent of a monomial e_a in the group ring of Z^r.
using Exponent = std::vector<long>;

// Element of the group ring Z[Z^r] (Laurent polynomials in r variables).
// Invariant: no stored zero coefficients; every exponent has length rank.
class RingElement {
 public:
  explicit RingElement(std::size_t rank = 1);

  static auto one(std::size_t rank) -> RingElement;
  static auto monomial(const Exponent& a, const Integer& coeff = 1) -> RingElement;
  // e_a - 1
  static auto difference(const Exponent& a) -> RingElement;

  [[nodiscard]] auto rank() const -> std::size_t { return rank_; }
  [[nodiscard]] auto terms() const -> const std::map<Exponent, Integer>& { return terms_; }
  [[nodiscard]] auto is_zero() const -> bool { return terms_.empty(); }
  [[nodiscard]] auto coefficient(const Exponent& a) const -> Integer;
  // Value at a point of (Z \ 0)^r; negative exponents require unit coordinates.
  [[nodiscard]] auto evaluate(const std::vector<Integer>& point) const -> Integer;
  [[nodiscard]] auto pow(unsigned k) const -> RingElement;
  [[nodiscard]] auto to_string() const -> std::string;

  auto operator+=(const RingElement& o) -> RingElement&;
  auto operator-=(const RingElement& o) -> RingElement&;
  void add_term(const Exponent& a, const Integer& c);

  friend auto operator==(const RingElement& a, const RingElement& b) -> bool = default;

 private:
  std::size_t rank_;
  std::map<Exponent, Integer> terms_;
};

auto operator+(RingElement a, const RingElement& b) -> RingElement;
auto operator-(RingElement a, const RingElement& b) -> RingElement;
auto operator-(const RingElement& a) -> RingElement;
auto operator*(const RingElement& a, const RingElement& b) -> RingElement;
auto operator*(const Integer& c, const RingElement& a) -> RingElement;

// Π(e_{a_i} - 1) over nonzero exponents a_i.
struct DifferenceProduct {
  std::size_t rank = 1;
  std::vector<Exponent> factors;

  [[nodiscard]] auto expand() const -> RingElement;
};

}  // namespace tw
