#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tw/ia_johnson.hpp"
#include "tw/lattice.hpp"
#include "tw/symplectic.hpp"

namespace tw {

enum class SpaceKind { Wedge3, Ug, TildeW, Wn };
enum class XsetKind { AllNonzero, NeitherKernel };

[[nodiscard]] auto space_name(SpaceKind k) -> std::string;
[[nodiscard]] auto parse_space(const std::string& s) -> SpaceKind;
[[nodiscard]] auto xset_name(XsetKind k) -> std::string;
[[nodiscard]] auto parse_xset(const std::string& s) -> XsetKind;

struct LabelledMatrix {
  std::string label;
  IntMatrix forward;
  IntMatrix backward;
};

// Generators of Sp_{2g}(Z) or SL_n(Z) acting on one of the four spaces.
class InducedAction {
 public:
  // Wedge3 / Ug: parameter is the genus g. TildeW / Wn: parameter is n.
  InducedAction(SpaceKind kind, int parameter);

  [[nodiscard]] auto kind() const -> SpaceKind { return kind_; }
  [[nodiscard]] auto parameter() const -> int { return parameter_; }
  [[nodiscard]] auto dimension() const -> std::size_t { return dimension_; }
  // Generators on the base lattice H.
  [[nodiscard]] auto base_generators() const -> const std::vector<LabelledMatrix>& { return base_; }
  // Generators on the space.
  [[nodiscard]] auto generators() const -> const std::vector<LabelledMatrix>& { return induced_; }
  // Matrix on the space induced by an invertible matrix on H; throws when the defining sublattice moves.
  [[nodiscard]] auto induce(const IntMatrix& m) const -> IntMatrix;
  [[nodiscard]] auto xset_member(const IntVector& v, XsetKind xset) const -> bool;
  [[nodiscard]] auto ug() const -> const UgSpace* { return ug_.get(); }
  [[nodiscard]] auto tilde_w() const -> const TildeWSpace* { return tw_.get(); }

 private:
  SpaceKind kind_;
  int parameter_;
  std::size_t dimension_ = 0;
  std::shared_ptr<const UgSpace> ug_;
  std::shared_ptr<const TildeWSpace> tw_;
  std::vector<LabelledMatrix> base_;
  std::vector<LabelledMatrix> induced_;
};

// Symplectic transvection x ↦ x + (x·v)v on H = Z^{2g}.
[[nodiscard]] auto transvection(const SymplecticSpace& h, const IntVector& v) -> IntMatrix;
// (m^{-T}) ⊗ ∧²m on H*⊗∧²H.
[[nodiscard]] auto induce_tilde_w(const IntMatrix& m) -> IntMatrix;
// Matrix on U_g or W_n induced by m; CheckFailure when Ω∧H or ι(H) is not preserved.
[[nodiscard]] auto induce_quotient(const IntMatrix& m, SpaceKind space) -> IntMatrix;

struct DisplacementInstance {
  Lattice b;
  std::vector<IntVector> x;
  XsetKind xset = XsetKind::NeitherKernel;
};
// Throws PreconditionError on rank or ambient violations and on elements of X outside the set.
void validate_instance(const DisplacementInstance& inst, const InducedAction& act);

// Word in the generators: (generator index, ±1); the matrix is the left-to-right product.
struct Witness {
  std::vector<std::pair<std::size_t, int>> letters;
  friend auto operator==(const Witness& a, const Witness& b) -> bool = default;
};
[[nodiscard]] auto witness_matrix(const InducedAction& act, const Witness& w) -> IntMatrix;
[[nodiscard]] auto witness_string(const InducedAction& act, const Witness& w) -> std::string;

struct SearchOptions {
  int max_len = 12;
  std::uint64_t seed = 1;
  std::size_t iddfs_budget = 200000;  // nodes visited by the exhaustive phase
  std::size_t random_words = 4000;    // seeded random words tried afterwards
};

struct SearchResult {
  std::optional<Witness> witness;  // absent: Exhausted, which refutes nothing
  std::string phase;               // "iddfs", "random" or "exhausted"
  std::size_t nodes = 0;
};

[[nodiscard]] auto displacement_search(const DisplacementInstance& inst, const InducedAction& act,
                                       const SearchOptions& opt) -> SearchResult;
// Recomputes g(B) as a lattice and checks every x in X for non-membership.
[[nodiscard]] auto verify_witness(const DisplacementInstance& inst, const InducedAction& act, const Witness& w) -> bool;

}  // namespace tw
