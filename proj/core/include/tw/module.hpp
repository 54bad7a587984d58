#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tw/lattice.hpp"
#include "tw/ring.hpp"

namespace tw {

// Finitely generated abelian group Z^d / relations with a commuting invertible action of Z^r.
// Matrices act on column vectors. Invariants are checked on construction.
class MatrixModule {
 public:
  MatrixModule(std::size_t dim, std::vector<IntMatrix> action, std::vector<IntMatrix> inverses,
               Lattice relations);
  // Free module with no relations.
  MatrixModule(std::size_t dim, std::vector<IntMatrix> action, std::vector<IntMatrix> inverses);

  [[nodiscard]] auto dim() const -> std::size_t { return dim_; }
  [[nodiscard]] auto rank_A() const -> std::size_t { return action_.size(); }
  [[nodiscard]] auto relations() const -> const Lattice& { return relations_; }
  [[nodiscard]] auto action(std::size_t i) const -> const IntMatrix& { return action_.at(i); }
  [[nodiscard]] auto inverse(std::size_t i) const -> const IntMatrix& { return inverses_.at(i); }
  [[nodiscard]] auto is_free() const -> bool { return relations_.rank() == 0; }

  [[nodiscard]] auto canonical(const IntVector& x) const -> IntVector;
  [[nodiscard]] auto equal(const IntVector& x, const IntVector& y) const -> bool;
  // e_a · x
  [[nodiscard]] auto apply_monomial(const Exponent& a, const IntVector& x) const -> IntVector;
  // Same action on the quotient by relations + extra.
  [[nodiscard]] auto quotient(const Lattice& extra) const -> MatrixModule;

 private:
  std::size_t dim_;
  std::vector<IntMatrix> action_;
  std::vector<IntMatrix> inverses_;
  Lattice relations_;
};

[[nodiscard]] auto act(const RingElement& p, const IntVector& x, const MatrixModule& m) -> IntVector;
[[nodiscard]] auto annihilates(const RingElement& p, const IntVector& x, const MatrixModule& m) -> bool;

// Smallest q with I^q M = 0 for the augmentation ideal I; nullopt when no q <= max_q works.
[[nodiscard]] auto nilpotency_index(const MatrixModule& m, int max_q) -> std::optional<int>;

// Lattice spanned by relations and the images of (rho_i - 1) applied to `sub`.
[[nodiscard]] auto augmentation_image(const MatrixModule& m, const Lattice& sub) -> Lattice;

struct Coinvariants {
  std::vector<Integer> invariant_factors;  // length dim: ones first, zeros last
  std::size_t min_generators = 0;          // factors different from 1
  std::vector<IntVector> generators;       // lifts generating M_A, one per such factor
};
[[nodiscard]] auto coinvariants(const MatrixModule& m) -> Coinvariants;

// Fixed vectors of a free module, as a saturated lattice.
[[nodiscard]] auto invariants(const MatrixModule& m) -> Lattice;

// Π (rho_i - 1)^{k_i} x
[[nodiscard]] auto f_bk(const MatrixModule& m, const IntVector& x, const std::vector<int>& bk) -> IntVector;

struct LemalgResult {
  std::vector<IntVector> generators;
  int nilpotency_index = 0;
  std::size_t coinvariant_generators = 0;  // min generators of M_A
  Integer bound;                           // binom(k + r - 1, r) · n
};
[[nodiscard]] auto lemalg_generating_set(const MatrixModule& m, int max_q = 64) -> LemalgResult;

// True when generators together with relations span Z^d, so they generate M as a group.
[[nodiscard]] auto spans_module(const MatrixModule& m, const std::vector<IntVector>& generators) -> bool;
// True when the span of generators plus relations is stable under every rho_i and sigma_i.
[[nodiscard]] auto closed_under_action(const MatrixModule& m, const std::vector<IntVector>& generators) -> bool;

struct FGCertificate {
  std::vector<std::pair<IntVector, int>> directions;  // (a_s, k_s)
};

struct CertifiedGenerators {
  std::vector<IntVector> generators;
  Integer index;  // |Z^r : <a_1..a_r>|
  bool verified = false;
};

[[nodiscard]] auto fg_from_certificate(const MatrixModule& m, const IntVector& x, const FGCertificate& cert)
    -> CertifiedGenerators;

}  // namespace tw
