#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tw/matrix.hpp"

namespace tw {

// Lexicographic basis of the degree-p exterior power of Z^n, p in {2, 3}.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t n, std::size_t degree);

  [[nodiscard]] auto n() const -> std::size_t { return n_; }
  [[nodiscard]] auto degree() const -> std::size_t { return degree_; }
  [[nodiscard]] auto size() const -> std::size_t { return tuples_.size(); }
  // Sorted index tuple of basis element `pos` (unused trailing slots are zero for degree 2).
  [[nodiscard]] auto tuple(std::size_t pos) const -> const std::array<std::size_t, 3>& { return tuples_.at(pos); }
  // Position of the strictly increasing tuple.
  [[nodiscard]] auto index(std::size_t i, std::size_t j) const -> std::size_t;
  [[nodiscard]] auto index(std::size_t i, std::size_t j, std::size_t k) const -> std::size_t;

 private:
  std::size_t n_;
  std::size_t degree_;
  std::vector<std::array<std::size_t, 3>> tuples_;
  std::vector<std::size_t> lookup_;  // dense n^degree table, npos off the increasing tuples
};

// Coordinates of x∧y over the lexicographic pairs (2x2 minors).
[[nodiscard]] auto wedge2(const IntVector& x, const IntVector& y) -> IntVector;
// Coordinates of x∧y∧z over the lexicographic triples (3x3 minors).
[[nodiscard]] auto wedge3(const IntVector& x, const IntVector& y, const IntVector& z) -> IntVector;
// Coordinates of w∧z for w in degree 2.
[[nodiscard]] auto wedge2_1(const IntVector& w, std::size_t n, const IntVector& z) -> IntVector;

// Matrix of the induced map on the exterior square / cube (columns are images of basis elements).
// The input must be invertible over Z.
[[nodiscard]] auto induce_wedge2(const IntMatrix& m) -> IntMatrix;
[[nodiscard]] auto induce_wedge3(const IntMatrix& m) -> IntMatrix;

}  // namespace tw
