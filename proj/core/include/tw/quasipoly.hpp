#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tw/integer.hpp"

namespace tw {

using GroupElement = IntVector;

// Z^free_rank ⊕ ⊕ Z/torsion_i; torsion coordinates are kept in [0, modulus).
class TargetGroup {
 public:
  TargetGroup() = default;
  TargetGroup(std::size_t free_rank, std::vector<Integer> torsion);

  [[nodiscard]] auto free_rank() const -> std::size_t { return free_rank_; }
  [[nodiscard]] auto torsion() const -> const std::vector<Integer>& { return torsion_; }
  [[nodiscard]] auto size() const -> std::size_t { return free_rank_ + torsion_.size(); }

  [[nodiscard]] auto zero() const -> GroupElement { return GroupElement(size()); }
  [[nodiscard]] auto normalize(GroupElement x) const -> GroupElement;
  [[nodiscard]] auto add(const GroupElement& x, const GroupElement& y) const -> GroupElement;
  [[nodiscard]] auto sub(const GroupElement& x, const GroupElement& y) const -> GroupElement;
  [[nodiscard]] auto neg(const GroupElement& x) const -> GroupElement;
  [[nodiscard]] auto scale(const Integer& c, const GroupElement& x) const -> GroupElement;
  [[nodiscard]] auto is_zero(const GroupElement& x) const -> bool;

  friend auto operator==(const TargetGroup& a, const TargetGroup& b) -> bool = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

// f: [lo, hi] -> B.
struct WindowFn1 {
  TargetGroup group;
  long lo = 0;
  long hi = -1;
  std::vector<GroupElement> values;

  WindowFn1() = default;
  WindowFn1(TargetGroup g, long lo, long hi);

  [[nodiscard]] auto size() const -> std::size_t { return values.size(); }
  [[nodiscard]] auto contains(long t) const -> bool { return t >= lo && t <= hi; }
  [[nodiscard]] auto at(long t) const -> const GroupElement&;
  void set(long t, GroupElement v);
  [[nodiscard]] auto is_zero() const -> bool;

  friend auto operator==(const WindowFn1& a, const WindowFn1& b) -> bool = default;
};

// f: [klo, khi] x [llo, lhi] -> B, row-major with k outer.
struct WindowFn2 {
  TargetGroup group;
  long klo = 0;
  long khi = -1;
  long llo = 0;
  long lhi = -1;
  std::vector<GroupElement> values;

  WindowFn2() = default;
  WindowFn2(TargetGroup g, long klo, long khi, long llo, long lhi);

  [[nodiscard]] auto contains(long k, long l) const -> bool { return k >= klo && k <= khi && l >= llo && l <= lhi; }
  [[nodiscard]] auto at(long k, long l) const -> const GroupElement&;
  void set(long k, long l, GroupElement v);
  [[nodiscard]] auto is_zero() const -> bool;

  friend auto operator==(const WindowFn2& a, const WindowFn2& b) -> bool = default;
};

// Letters of an operator word; words compose like operators, the last letter acts first.
struct Op {
  enum class Kind { Shift, InverseShift, Difference, StepDifference };
  Kind kind = Kind::Difference;
  long step = 1;  // only for StepDifference: (Δ_h f)(t) = f(t+h) - f(t)

  static auto T() -> Op { return {Kind::Shift, 1}; }
  static auto T_inv() -> Op { return {Kind::InverseShift, 1}; }
  static auto Delta() -> Op { return {Kind::Difference, 1}; }
  static auto Delta_h(long h) -> Op { return {Kind::StepDifference, h}; }
};

// (Tf)(t) = f(t+1) on [lo-1, hi-1]; T⁻¹ the reverse; Δ on [lo, hi-1]; Δ_h loses |h| points.
[[nodiscard]] auto apply_operator(const std::vector<Op>& word, const WindowFn1& f) -> WindowFn1;
[[nodiscard]] auto difference(const WindowFn1& f) -> WindowFn1;
[[nodiscard]] auto difference_power(const WindowFn1& f, int k) -> WindowFn1;
// (T + 1) f on [lo, hi-1].
[[nodiscard]] auto shift_plus_one(const WindowFn1& f) -> WindowFn1;

// Smallest k <= kmax with Δ^{k+1} f = 0 on the window; needs hi - lo >= kmax + 1.
[[nodiscard]] auto poly_degree(const WindowFn1& f, int kmax) -> std::optional<int>;
// Smallest k <= kmax with (T+1)Δ^{k+1} f = 0 on the window; needs hi - lo >= kmax + 2.
[[nodiscard]] auto quasipoly_degree(const WindowFn1& f, int kmax) -> std::optional<int>;

// f(t) = Σ binom(t, i) b_i.
struct BinomialPoly {
  TargetGroup group;
  std::vector<GroupElement> coefficients;

  [[nodiscard]] auto evaluate(long t) const -> GroupElement;
  [[nodiscard]] auto degree() const -> int { return static_cast<int>(coefficients.size()) - 1; }
};

// Coefficients b_i = (Δ^i f)(0), extrapolating exactly when 0 lies outside the window.
[[nodiscard]] auto binomial_fit(const WindowFn1& f) -> BinomialPoly;
// Window of p on [lo, hi].
[[nodiscard]] auto tabulate(const BinomialPoly& p, long lo, long hi) -> WindowFn1;

}  // namespace tw
