#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tw/exterior.hpp"
#include "tw/lattice.hpp"
#include "tw/ring.hpp"

namespace tw {

// H = Z^{2g} with basis a_1, b_1, ..., a_g, b_g (a_i at 2i-2, b_i at 2i-1) and a_i·b_i = 1.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);

  [[nodiscard]] auto genus() const -> int { return genus_; }
  [[nodiscard]] auto rank() const -> std::size_t { return 2 * static_cast<std::size_t>(genus_); }
  [[nodiscard]] auto wedge3_dimension() const -> std::size_t { return basis3_.size(); }
  [[nodiscard]] auto basis3() const -> const ExteriorBasis& { return basis3_; }
  // 1-based symplectic basis vectors.
  [[nodiscard]] auto a(int i) const -> IntVector;
  [[nodiscard]] auto b(int i) const -> IntVector;
  [[nodiscard]] auto form() const -> const IntMatrix& { return form_; }
  [[nodiscard]] auto pairing(const IntVector& x, const IntVector& y) const -> Integer;
  // Ω = Σ a_i∧b_i in the exterior square.
  [[nodiscard]] auto omega() const -> IntVector;
  [[nodiscard]] auto omega_wedge(const IntVector& c) const -> IntVector;
  // C(x∧y∧z) = (x·y)z + (y·z)x + (z·x)y, extended linearly.
  [[nodiscard]] auto contraction(const IntVector& w) const -> IntVector;
  [[nodiscard]] auto contraction_matrix() const -> const IntMatrix& { return contraction_; }

 private:
  int genus_;
  ExteriorBasis basis3_;
  IntMatrix form_;
  IntMatrix contraction_;
};

// The quotient U_g of the exterior cube by Ω∧H, presented on a complement.
class UgSpace {
 public:
  explicit UgSpace(int genus);

  [[nodiscard]] auto space() const -> const SymplecticSpace& { return space_; }
  [[nodiscard]] auto omega_h() const -> const Lattice& { return omega_h_; }
  [[nodiscard]] auto presentation() const -> const QuotientPresentation& { return quotient_; }
  [[nodiscard]] auto rank() const -> std::size_t { return quotient_.dimension(); }
  [[nodiscard]] auto project(const IntVector& w) const -> IntVector { return quotient_.project(w); }
  [[nodiscard]] auto lift(const IntVector& u) const -> IntVector { return quotient_.lift(u); }
  [[nodiscard]] auto in_ker_pi(const IntVector& w) const -> bool { return omega_h_.contains(w); }
  [[nodiscard]] auto in_ker_C(const IntVector& w) const -> bool { return is_zero(space_.contraction(w)); }
  // Image of a lattice of the exterior cube in U_g coordinates.
  [[nodiscard]] auto project(const Lattice& l) const -> Lattice;

 private:
  SymplecticSpace space_;
  Lattice omega_h_;
  QuotientPresentation quotient_;
};

// x1∧x2∧x3 for the rows of L's canonical HNF basis; the sign follows that row order.
[[nodiscard]] auto u_L(const Lattice& l) -> IntVector;

// Johnson value of a commutator of twists along disjoint simple intersecting pairs.
[[nodiscard]] auto tau_sip(const IntVector& x, const IntVector& y, const IntVector& z) -> IntVector;

struct BoundingPairValue {
  IntVector value;
  // g' >= g - 1: every c orthogonal to P lies in the remaining handle, so the value is Ω∧c and lies in ker π.
  bool degenerate = false;
};
// (Σ p_{2i-1}∧p_{2i})∧c for a symplectic basis p of a rank-2g' sublattice orthogonal to c.
[[nodiscard]] auto tau_bp(const SymplecticSpace& h, int gp, const IntVector& c, const std::vector<IntVector>& p)
    -> BoundingPairValue;

struct DecompositionReport {
  int genus = 0;
  std::size_t total_rank = 0;
  std::size_t ker_pi_rank = 0;
  std::size_t ker_c_rank = 0;
  std::size_t intersection_rank = 0;
  bool ker_pi_saturated = false;

  [[nodiscard]] auto ok() const -> bool {
    return ker_pi_saturated && intersection_rank == 0 && ker_pi_rank + ker_c_rank == total_rank;
  }
};
[[nodiscard]] auto rational_decomposition_check(int genus) -> DecompositionReport;

// Genus 3 only: C mod 2 on U_3 and the lattice 2·ker(C mod 2).
struct TildeV3 {
  UgSpace ug{3};
  IntMatrix contraction_on_ug;  // 6 x 14 integer lift of C∘lift
  bool well_defined = false;    // C(Ω∧H) ⊂ 2H
  Lattice ker_mod2;
  Lattice tilde;
  Integer index_ug_ker;
  Integer index_ker_tilde;
  Integer index_ug_tilde;
};
[[nodiscard]] auto c_mod2_g3(const UgSpace& ug, const IntVector& u) -> std::vector<int>;
[[nodiscard]] auto tilde_v3() -> TildeV3;

// Splitting H = P1 ⊕ P2 along a separating curve of genera (g1, g2).
struct Splitting {
  int g1 = 0;
  int g2 = 0;
  [[nodiscard]] auto genus() const -> int { return g1 + g2; }
};
// e_1..e_{2g1} span P1 and f_1..f_{2g2} span P2 (1-based).
[[nodiscard]] auto splitting_e(const Splitting& s, int i) -> IntVector;
[[nodiscard]] auto splitting_f(const Splitting& s, int i) -> IntVector;

struct WGammaBases {
  explicit WGammaBases(const Splitting& s) : splitting(s), ug(s.genus()) {}

  Splitting splitting;
  UgSpace ug;
  std::vector<IntVector> u_gamma_generators;  // exterior cube coordinates
  std::vector<IntVector> w1_generators;
  std::vector<IntVector> w2_generators;
  Lattice u_gamma;  // U_g coordinates from here on
  Lattice w1;
  Lattice w2;
  Lattice v_gamma;
  long r1 = 0;
  long r2 = 0;
  long r = 0;
};
[[nodiscard]] auto wgamma_bases(const Splitting& s) -> WGammaBases;

// The fourteen listed generators of Ṽ_3 for a genus-3 splitting, in exterior cube coordinates.
// The genus-1 side plays the role of P1 in the listing.
[[nodiscard]] auto listed_tilde_v3_basis(const Splitting& s) -> std::vector<IntVector>;

struct ContainmentReport {
  Splitting splitting;
  bool direct = false;
  Integer m;
  bool scaled_ug_contained = false;
  std::optional<std::size_t> first_missing;  // U_g basis index whose 2m-multiple escapes
  long rank_ug = 0;
  long rank_sum = 0;
  bool rank_identity = false;
  std::optional<bool> tilde_v3_contained;       // genus 3 only
  std::optional<bool> tilde_v3_basis_matches;   // listed basis spans 2·ker(C mod 2)

  [[nodiscard]] auto ok() const -> bool {
    return direct && scaled_ug_contained && rank_identity && tilde_v3_contained.value_or(true) &&
           tilde_v3_basis_matches.value_or(true);
  }
};
[[nodiscard]] auto containment_check(const Splitting& s) -> ContainmentReport;

struct NilpotencyBounds {
  int genus = 0;
  int curve_genus = 0;
  long r = 0;
  long bound = 0;            // 4r + 1
  long genus2_formula = 0;   // 32g^2 - 104g + 65
  long r_from_splitting = 0; // r1 + r2 of the splitting (curve_genus, g - curve_genus)
};
[[nodiscard]] auto nilpotency_bounds(int genus, int curve_genus) -> NilpotencyBounds;

// (e+1)(e-1)^5 in one variable, and its expanded form e^6 - 4e^5 + 5e^4 - 5e^2 + 4e - 1.
[[nodiscard]] auto annihilator_factor_form() -> RingElement;
[[nodiscard]] auto annihilator_poly() -> RingElement;

}  // namespace tw
