#pragma once

#include <optional>
#include <vector>

#include "tw/matrix.hpp"

namespace tw {

struct HermiteForm {
  IntMatrix h;  // canonical row HNF, zero rows last
  IntMatrix u;  // unimodular, u·m = h
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Row-style HNF: positive pivots, entries above each pivot reduced into [0, pivot).
[[nodiscard]] auto hermite_normal_form(const IntMatrix& m) -> HermiteForm;
// Same canonical h, skipping the transform.
[[nodiscard]] auto hermite_basis(const IntMatrix& m) -> HermiteForm;

struct SmithForm {
  IntMatrix d;  // diagonal, nonnegative, d_i | d_{i+1}
  IntMatrix u;
  IntMatrix v;  // u·m·v = d
};

[[nodiscard]] auto smith_normal_form(const IntMatrix& m) -> SmithForm;
// Diagonal of the Smith form, of length min(rows, cols).
[[nodiscard]] auto smith_invariants(const IntMatrix& m) -> std::vector<Integer>;

[[nodiscard]] auto determinant(const IntMatrix& m) -> Integer;
// Exact inverse when |det m| = 1.
[[nodiscard]] auto unimodular_inverse(const IntMatrix& m) -> std::optional<IntMatrix>;

}  // namespace tw
