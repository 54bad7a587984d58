#pragma once

#include <cstddef>
#include <string>

#include "tw/exterior.hpp"
#include "tw/free_group.hpp"
#include "tw/lattice.hpp"

namespace tw {

// H*⊗∧²H for H = Z^n; coordinate of e_i*⊗(e_j∧e_k), j < k, at i·binom(n,2) + pair(j,k).
class TildeWSpace {
 public:
  explicit TildeWSpace(int n);

  [[nodiscard]] auto n() const -> int { return n_; }
  [[nodiscard]] auto dimension() const -> std::size_t { return pairs_.size() * static_cast<std::size_t>(n_); }
  [[nodiscard]] auto pairs() const -> const ExteriorBasis& { return pairs_; }
  // Coordinate vector of e_i*⊗(e_j∧e_k) for 1-based distinct j, k (any order, sign applied).
  [[nodiscard]] auto basis_element(int i, int j, int k) const -> IntVector;
  // C(ξ⊗(x∧y)) = ξ(x)y - ξ(y)x
  [[nodiscard]] auto contraction(const IntVector& x) const -> IntVector;
  [[nodiscard]] auto contraction_matrix() const -> const IntMatrix& { return contraction_; }
  // ι(v) = Σ e_i*⊗(e_i∧v)
  [[nodiscard]] auto iota(const IntVector& v) const -> IntVector;
  [[nodiscard]] auto iota_h() const -> const Lattice& { return iota_h_; }
  [[nodiscard]] auto presentation() const -> const QuotientPresentation& { return quotient_; }
  [[nodiscard]] auto quotient_rank() const -> std::size_t { return quotient_.dimension(); }
  [[nodiscard]] auto project(const IntVector& x) const -> IntVector { return quotient_.project(x); }
  [[nodiscard]] auto in_ker_C(const IntVector& x) const -> bool { return is_zero(contraction(x)); }
  [[nodiscard]] auto in_ker_pi(const IntVector& x) const -> bool { return iota_h_.contains(x); }
  [[nodiscard]] auto to_string(const IntVector& x) const -> std::string;

 private:
  int n_;
  ExteriorBasis pairs_;
  IntMatrix contraction_;
  Lattice iota_h_;
  QuotientPresentation quotient_;
};

// Antisymmetric quadratic Magnus data of φ(a_i)a_i^{-1}, read as e_i*⊗(e_j∧e_k) with no sign change.
[[nodiscard]] auto johnson_tau_raw(const TildeWSpace& w, const EndoOfFree& phi) -> IntVector;
// The single global sign making τ(K_12) = e_1*⊗(e_1∧e_2); derived from johnson_tau_raw at n = 3.
[[nodiscard]] auto tau_sign_calibration() -> int;
// Calibrated Johnson homomorphism on IA_n; throws PreconditionError off IA_n.
[[nodiscard]] auto johnson_tau_IA(const TildeWSpace& w, const EndoOfFree& phi) -> IntVector;

}  // namespace tw
