#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tw/errors.hpp"
#include "tw/quasipoly.hpp"

namespace tw {

// Raised when an input violates the functional equation it was handed for; carries the point.
struct EquationViolated : CheckFailure {
  EquationViolated(const std::string& what, std::vector<long> at) : CheckFailure(what), witness(std::move(at)) {}
  std::vector<long> witness;
};

struct Cell2 {
  long k = 0;
  long l = 0;
  friend auto operator==(const Cell2&, const Cell2&) -> bool = default;
};

// Inclusive integer ranges, one per variable.
struct Range {
  long lo = 0;
  long hi = 0;
  [[nodiscard]] auto contains(long t) const -> bool { return t >= lo && t <= hi; }
  [[nodiscard]] auto length() const -> long { return hi - lo + 1; }
};

// f(k+1,l) + f(k,l+1) + f(k-1,l-1) = f(k-1,l) + f(k,l-1) + f(k+1,l+1),
// checked at every interior cell. Returns the first failing cell, if any.
[[nodiscard]] auto eq_func1_violation(const WindowFn2& f) -> std::optional<Cell2>;

// f(k,l) = κ(k) + λ(l) + μ(k-l) with κ(0) = 0 and λ(0) = λ(1) = 0.
struct Decomposition2 {
  WindowFn1 kappa;
  WindowFn1 lambda;
  WindowFn1 mu;
  std::size_t verified_cells = 0;  // cells where all three are defined, each checked against f
  long centered_radius = 0;        // largest R with [-R,R]^2 inside the verified region

  [[nodiscard]] auto defined_at(long k, long l) const -> bool;
  [[nodiscard]] auto value(long k, long l) const -> GroupElement;
};

// Needs klo <= 0 <= khi and llo <= 0, lhi >= 1.
[[nodiscard]] auto solve_eq_func1(const WindowFn2& f) -> Decomposition2;
// f - (κ + λ + μ) on the box; cells outside the decomposition's domain are left at zero.
[[nodiscard]] auto decomposition_residual(const WindowFn2& f, const Decomposition2& d) -> WindowFn2;

struct UniquenessReport {
  std::optional<Cell2> first_nonzero;  // empty means f vanishes on the box
  std::size_t derived_cells = 0;       // cells forced to zero by the row-by-row induction
  [[nodiscard]] auto ok() const -> bool { return !first_nonzero.has_value(); }
};

// For f satisfying the equation and vanishing on rows l = 0, 1 and column k = 0, replays the
// upward and downward induction over rows. Precondition failures throw PreconditionError.
[[nodiscard]] auto boundary_uniqueness_check(const WindowFn2& f) -> UniquenessReport;

// f1(k) + f2(l) + f3(m) + f4(k-l) + f5(k-m) + f6(k-l-m) = 0 on box = {k, l, m}.
struct AffineForm {
  GroupElement slope;
  GroupElement offset;  // f(t) = t·slope + offset
  friend auto operator==(const AffineForm&, const AffineForm&) -> bool = default;
};
[[nodiscard]] auto solve_eq6(const std::array<WindowFn1, 6>& f, const std::array<Range, 3>& box)
    -> std::array<AffineForm, 6>;
// Argument range of each f_i over the box.
[[nodiscard]] auto eq6_windows(const std::array<Range, 3>& box) -> std::array<Range, 6>;

// Ten-term equation in (t, k, l, m): arguments t+m, t-k+m, t-l+m, t, t-k, t-l, t-k-l,
// t-k-m, t-l-m, t-k-l-m.
struct Eq9Entry {
  Range window;
  std::optional<int> quasi_degree;  // within 2
  std::optional<int> poly_degree;   // within 2
  bool must_be_polynomial = false;  // f1, f4, f7, f10
  [[nodiscard]] auto certified() const -> bool {
    return quasi_degree.has_value() && (!must_be_polynomial || poly_degree.has_value());
  }
};
struct Eq9Report {
  std::array<Eq9Entry, 10> entries;
  [[nodiscard]] auto certified() const -> bool;
};
[[nodiscard]] auto eq9_windows(const std::array<Range, 4>& box) -> std::array<Range, 10>;
[[nodiscard]] auto check_eq9(const std::array<WindowFn1, 10>& f, const std::array<Range, 4>& box) -> Eq9Report;

// f1(k,l) + f2(k-m,l) = f3(k,m) + f4(k-l,m) on box = {k, l, m}.
struct Func2Solution {
  WindowFn1 g1, g2, g3, g4, h;
  GroupElement a;  // λ1 + λ2 = l·a + b
  GroupElement b;
  std::size_t verified_cells = 0;
};
[[nodiscard]] auto solve_eq_func2(const std::array<WindowFn2, 4>& f, const std::array<Range, 3>& box)
    -> Func2Solution;

// Restriction of f to [lo, hi]; throws PreconditionError when not covered.
[[nodiscard]] auto restrict_window(const WindowFn1& f, long lo, long hi, const std::string& name) -> WindowFn1;

}  // namespace tw
