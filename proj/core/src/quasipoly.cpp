#include "tw/quasipoly.hpp"

#include <string>

#include "tw/errors.hpp"

namespace tw {

TargetGroup::TargetGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (const auto& q : torsion_) {
    if (q < 2) throw PreconditionError("torsion moduli must be >= 2");
  }
}

auto TargetGroup::normalize(GroupElement x) const -> GroupElement {
  if (x.size() != size()) {
    throw DimensionError("group element of length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(size()));
  }
  for (std::size_t i = 0; i < torsion_.size(); ++i) x[free_rank_ + i] = floor_mod(x[free_rank_ + i], torsion_[i]);
  return x;
}

auto TargetGroup::add(const GroupElement& x, const GroupElement& y) const -> GroupElement {
  return normalize(tw::add(x, y));
}

auto TargetGroup::sub(const GroupElement& x, const GroupElement& y) const -> GroupElement {
  return normalize(tw::sub(x, y));
}

auto TargetGroup::neg(const GroupElement& x) const -> GroupElement { return normalize(tw::neg(x)); }

auto TargetGroup::scale(const Integer& c, const GroupElement& x) const -> GroupElement {
  return normalize(tw::scale(c, x));
}

auto TargetGroup::is_zero(const GroupElement& x) const -> bool { return tw::is_zero(normalize(x)); }

WindowFn1::WindowFn1(TargetGroup g, long lo_, long hi_) : group(std::move(g)), lo(lo_), hi(hi_) {
  if (hi < lo) throw PreconditionError("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
  values.assign(static_cast<std::size_t>(hi - lo + 1), group.zero());
}

auto WindowFn1::at(long t) const -> const GroupElement& {
  if (!contains(t)) throw PreconditionError("t = " + std::to_string(t) + " outside the window");
  return values[static_cast<std::size_t>(t - lo)];
}

void WindowFn1::set(long t, GroupElement v) {
  if (!contains(t)) throw PreconditionError("t = " + std::to_string(t) + " outside the window");
  values[static_cast<std::size_t>(t - lo)] = group.normalize(std::move(v));
}

auto WindowFn1::is_zero() const -> bool {
  for (const auto& v : values) {
    if (!group.is_zero(v)) return false;
  }
  return true;
}

WindowFn2::WindowFn2(TargetGroup g, long klo_, long khi_, long llo_, long lhi_)
    : group(std::move(g)), klo(klo_), khi(khi_), llo(llo_), lhi(lhi_) {
  if (khi < klo || lhi < llo) throw PreconditionError("two-variable window is empty");
  values.assign(static_cast<std::size_t>((khi - klo + 1) * (lhi - llo + 1)), group.zero());
}

auto WindowFn2::at(long k, long l) const -> const GroupElement& {
  if (!contains(k, l)) {
    throw PreconditionError("(" + std::to_string(k) + ", " + std::to_string(l) + ") outside the box");
  }
  return values[static_cast<std::size_t>((k - klo) * (lhi - llo + 1) + (l - llo))];
}

void WindowFn2::set(long k, long l, GroupElement v) {
  if (!contains(k, l)) {
    throw PreconditionError("(" + std::to_string(k) + ", " + std::to_string(l) + ") outside the box");
  }
  values[static_cast<std::size_t>((k - klo) * (lhi - llo + 1) + (l - llo))] = group.normalize(std::move(v));
}

auto WindowFn2::is_zero() const -> bool {
  for (const auto& v : values) {
    if (!group.is_zero(v)) return false;
  }
  return true;
}

namespace {

auto too_small(const std::string& what) -> PreconditionError {
  return PreconditionError("window too small for " + what);
}

auto step_difference(const WindowFn1& f, long h) -> WindowFn1 {
  if (h == 0) {
    WindowFn1 z(f.group, f.lo, f.hi);
    return z;
  }
  const long lo = h > 0 ? f.lo : f.lo - h;
  const long hi = h > 0 ? f.hi - h : f.hi;
  if (hi < lo) throw too_small("a step difference of " + std::to_string(h));
  WindowFn1 g(f.group, lo, hi);
  for (long t = lo; t <= hi; ++t) g.set(t, f.group.sub(f.at(t + h), f.at(t)));
  return g;
}

auto shifted(const WindowFn1& f, long by) -> WindowFn1 {
  WindowFn1 g = f;
  g.lo -= by;
  g.hi -= by;
  return g;
}

}  // namespace

auto difference(const WindowFn1& f) -> WindowFn1 { return step_difference(f, 1); }

auto difference_power(const WindowFn1& f, int k) -> WindowFn1 {
  WindowFn1 g = f;
  for (int i = 0; i < k; ++i) g = difference(g);
  return g;
}

auto shift_plus_one(const WindowFn1& f) -> WindowFn1 {
  if (f.hi - f.lo < 1) throw too_small("T + 1");
  WindowFn1 g(f.group, f.lo, f.hi - 1);
  for (long t = f.lo; t < f.hi; ++t) g.set(t, f.group.add(f.at(t + 1), f.at(t)));
  return g;
}

auto apply_operator(const std::vector<Op>& word, const WindowFn1& f) -> WindowFn1 {
  WindowFn1 g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case Op::Kind::Shift:
        g = shifted(g, 1);
        break;
      case Op::Kind::InverseShift:
        g = shifted(g, -1);
        break;
      case Op::Kind::Difference:
        g = step_difference(g, 1);
        break;
      case Op::Kind::StepDifference:
        g = step_difference(g, it->step);
        break;
    }
  }
  return g;
}

auto poly_degree(const WindowFn1& f, int kmax) -> std::optional<int> {
  if (kmax < 0) throw PreconditionError("kmax must be nonnegative");
  if (f.hi - f.lo < kmax + 1) throw too_small("polynomial degree " + std::to_string(kmax));
  WindowFn1 g = difference(f);
  for (int k = 0; k <= kmax; ++k) {
    if (g.is_zero()) return k;
    if (k < kmax) g = difference(g);
  }
  return std::nullopt;
}

auto quasipoly_degree(const WindowFn1& f, int kmax) -> std::optional<int> {
  if (kmax < 0) throw PreconditionError("kmax must be nonnegative");
  if (f.hi - f.lo < kmax + 2) throw too_small("quasipolynomial degree " + std::to_string(kmax));
  WindowFn1 g = difference(f);
  for (int k = 0; k <= kmax; ++k) {
    if (shift_plus_one(g).is_zero()) return k;
    if (k < kmax) g = difference(g);
  }
  return std::nullopt;
}

auto BinomialPoly::evaluate(long t) const -> GroupElement {
  GroupElement v = group.zero();
  for (std::size_t i = 0; i < coefficients.size(); ++i) addmul(v, binomial(t, i), coefficients[i]);
  return group.normalize(std::move(v));
}

auto tabulate(const BinomialPoly& p, long lo, long hi) -> WindowFn1 {
  WindowFn1 f(p.group, lo, hi);
  for (long t = lo; t <= hi; ++t) f.set(t, p.evaluate(t));
  return f;
}

auto binomial_fit(const WindowFn1& f) -> BinomialPoly {
  if (f.hi - f.lo < 1) throw too_small("binomial fitting (need two points)");
  const auto degree = poly_degree(f, static_cast<int>(f.hi - f.lo - 1));
  if (!degree) throw CheckFailure("not a polynomial on the window [" + std::to_string(f.lo) + ", " +
                                  std::to_string(f.hi) + "]");
  const int k = *degree;
  // Newton form at lo, then re-expanded at 0 through exact values on [0, k].
  BinomialPoly at_lo{f.group, {}};
  WindowFn1 g = f;
  for (int i = 0; i <= k; ++i) {
    at_lo.coefficients.push_back(g.at(g.lo));
    g = difference(g);
  }
  WindowFn1 around_zero(f.group, 0, k);
  for (long t = 0; t <= k; ++t) around_zero.set(t, at_lo.evaluate(t - f.lo));
  BinomialPoly out{f.group, {}};
  g = around_zero;
  for (int i = 0; i <= k; ++i) {
    out.coefficients.push_back(g.at(0));
    if (i < k) g = difference(g);
  }
  return out;
}

}  // namespace tw
