#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tw/integer.hpp"

namespace tw {

// (ngens - 1)·index + 1 generators for a subgroup of the given index.
[[nodiscard]] auto schreier_bound(const Integer& ngens, const Integer& index) -> Integer;
// Generators of H_2(Z^q) = ∧²Z^q.
[[nodiscard]] auto h2_generators(unsigned long q) -> Integer;
// Generators of H_1 of the extension bounded by the two outer terms of the five-term sequence.
[[nodiscard]] auto five_term_bound(const Integer& gens_h2_of_a, const Integer& gens_h1_of_g) -> Integer;
// binom(k + r - 1, r)·n
[[nodiscard]] auto lemalg_bound(long k, long r, const Integer& n) -> Integer;
// Binomial coefficient by Pascal's rule, as an independent check of the library binomial.
[[nodiscard]] auto pascal_binomial(unsigned n, unsigned k) -> Integer;

struct Scientific {
  int mantissa = 0;  // leading digits as an integer, e.g. 12 for 1.2
  int digits = 0;
  long exponent = 0;
  [[nodiscard]] auto to_string() const -> std::string;  // "1.2e20"
};
// Round a positive integer to `digits` significant digits (half up).
[[nodiscard]] auto scientific(const Integer& x, int digits) -> Scientific;

struct BoundQuantity {
  std::string name;
  Integer value;
  std::string formula;
};

struct BoundReport {
  std::vector<BoundQuantity> quantities;
  Integer integer_bound;
  Integer rational_bound;
  Scientific integer_scientific;
  Scientific rational_scientific;
  std::vector<std::pair<std::string, bool>> checks;

  [[nodiscard]] auto ok() const -> bool;
  [[nodiscard]] auto value(const std::string& name) const -> const Integer&;
};

// Index of Ṽ_3, Schreier, five-term and nilpotent-generation bounds chained together.
[[nodiscard]] auto thm_quant_pipeline() -> BoundReport;

}  // namespace tw
