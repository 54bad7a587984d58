#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tw/matrix.hpp"
#include "tw/normal_form.hpp"

namespace tw {

// Subgroup of Z^n held by its canonical row HNF basis; equal lattices have identical bases.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank = 0);

  static auto from_generators(std::size_t ambient_rank, const std::vector<IntVector>& gens) -> Lattice;
  static auto from_matrix(const IntMatrix& rows) -> Lattice;
  static auto full(std::size_t ambient_rank) -> Lattice;

  [[nodiscard]] auto ambient_rank() const -> std::size_t { return ambient_; }
  [[nodiscard]] auto rank() const -> std::size_t { return basis_.rows(); }
  [[nodiscard]] auto basis() const -> const IntMatrix& { return basis_; }
  [[nodiscard]] auto pivots() const -> const std::vector<std::size_t>& { return pivots_; }

  // Coefficients c with c·basis = v, or nullopt when v is not in the lattice.
  [[nodiscard]] auto coefficients(const IntVector& v) const -> std::optional<IntVector>;
  [[nodiscard]] auto contains(const IntVector& v) const -> bool;
  [[nodiscard]] auto contains(const Lattice& other) const -> bool;
  // Canonical representative of v modulo the lattice: pivot coordinates land in [0, pivot).
  [[nodiscard]] auto reduce(const IntVector& v) const -> IntVector;

  friend auto operator==(const Lattice& a, const Lattice& b) -> bool {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

[[nodiscard]] auto member(const Lattice& lattice, const IntVector& v) -> std::optional<IntVector>;

// Vectors of Z^n with a nonzero multiple in the lattice.
[[nodiscard]] auto saturate(const Lattice& lattice) -> Lattice;
[[nodiscard]] auto is_saturated(const Lattice& lattice) -> bool;

[[nodiscard]] auto lattice_sum(const Lattice& a, const Lattice& b) -> Lattice;
[[nodiscard]] auto lattice_scaled(const Lattice& a, const Integer& c) -> Lattice;
// Image of the lattice under v ↦ m·v.
[[nodiscard]] auto lattice_image(const IntMatrix& m, const Lattice& a) -> Lattice;

struct SumIntersect {
  Lattice sum;
  Lattice intersection;
  bool is_direct = false;
};
[[nodiscard]] auto sum_intersect(const Lattice& a, const Lattice& b) -> SumIntersect;

// {x in Z^cols : a·x = 0}, saturated.
[[nodiscard]] auto integer_kernel(const IntMatrix& a) -> Lattice;
// {z in Z^rows : z·a = 0}, saturated.
[[nodiscard]] auto left_kernel(const IntMatrix& a) -> Lattice;

// Finite-index quotient sup/sub with a transversal indexed by the SNF box.
class CosetTransversal {
 public:
  CosetTransversal(Lattice sub, Lattice sup);

  [[nodiscard]] auto index() const -> const Integer& { return index_; }
  [[nodiscard]] auto moduli() const -> const std::vector<Integer>& { return moduli_; }
  // Representative number k in lexicographic box order, 0 <= k < index.
  [[nodiscard]] auto rep(const Integer& k) const -> IntVector;
  // All representatives; refuses when the index exceeds `limit`.
  [[nodiscard]] auto reps(std::size_t limit = 1u << 16) const -> std::vector<IntVector>;
  // Box position of the coset containing v (v must lie in sup).
  [[nodiscard]] auto locate(const IntVector& v) const -> Integer;

 private:
  Lattice sub_;
  Lattice sup_;
  Integer index_;
  std::vector<Integer> moduli_;
  IntMatrix v_;
  IntMatrix v_inverse_;
};

[[nodiscard]] auto lattice_index(const Lattice& sub, const Lattice& sup) -> Integer;
[[nodiscard]] auto index_and_cosets(const Lattice& sub, const Lattice& sup) -> CosetTransversal;

// Z^n / L for a saturated L, realised on a complement: project and lift are exact.
class QuotientPresentation {
 public:
  QuotientPresentation() = default;
  explicit QuotientPresentation(Lattice kernel);

  [[nodiscard]] auto ambient_rank() const -> std::size_t { return kernel_.ambient_rank(); }
  [[nodiscard]] auto dimension() const -> std::size_t { return dim_; }
  [[nodiscard]] auto kernel() const -> const Lattice& { return kernel_; }
  [[nodiscard]] auto project(const IntVector& v) const -> IntVector;
  [[nodiscard]] auto lift(const IntVector& c) const -> IntVector;
  // Matrix of the induced map on the quotient; throws CheckFailure unless m preserves the kernel.
  [[nodiscard]] auto induced(const IntMatrix& m) const -> IntMatrix;
  // First kernel basis row whose image leaves the kernel, if any.
  [[nodiscard]] auto stability_violation(const IntMatrix& m) const -> std::optional<std::size_t>;

 private:
  Lattice kernel_;
  std::size_t dim_ = 0;
  bool unit_pivots_ = true;
  std::vector<std::size_t> free_columns_;
  IntMatrix change_;          // V with kernel·V = [unimodular | 0]
  IntMatrix change_inverse_;  // V^{-1}
};

}  // namespace tw
