#pragma once

#include <array>

#include "support.hpp"
#include "tw/functional_equations.hpp"
#include "tw/module.hpp"
#include "tw/normal_form.hpp"
#include "tw/quasipoly.hpp"

namespace tw::test {

// Z^r ⊕ (Z/n)^s with r in {1, 2} and at most one torsion factor.
inline auto random_target(Gen& gen) -> TargetGroup {
  static const long kModuli[] = {2, 3, 4, 6};
  std::vector<Integer> torsion;
  if (gen.coin()) torsion.emplace_back(kModuli[gen.index(4)]);
  return TargetGroup(static_cast<std::size_t>(gen.integer(1, 2)), torsion);
}

inline auto random_element(const TargetGroup& g, Gen& gen, long bound = 9) -> GroupElement {
  return g.normalize(gen.vector(g.size(), -bound, bound));
}

// Arbitrary (non-structured) function on [lo, hi].
inline auto random_function(const TargetGroup& g, long lo, long hi, Gen& gen) -> WindowFn1 {
  WindowFn1 f(g, lo, hi);
  for (long t = lo; t <= hi; ++t) f.set(t, random_element(g, gen));
  return f;
}

inline auto affine_function(const TargetGroup& g, long lo, long hi, const AffineForm& a) -> WindowFn1 {
  WindowFn1 f(g, lo, hi);
  for (long t = lo; t <= hi; ++t) f.set(t, g.add(g.scale(t, a.slope), a.offset));
  return f;
}

// f(k,l) = κ(k) + λ(l) + μ(k-l) for arbitrary κ, λ, μ; every such f solves the three-term equation.
struct PlantedFunc1 {
  WindowFn2 f;
  WindowFn1 kappa;
  WindowFn1 lambda;
  WindowFn1 mu;
};

inline auto plant_func1(Gen& gen) -> PlantedFunc1 {
  const auto g = random_target(gen);
  const long klo = -gen.integer(1, 4);
  const long khi = gen.integer(1, 4);
  const long llo = -gen.integer(1, 4);
  const long lhi = gen.integer(1, 4);
  PlantedFunc1 p{WindowFn2(g, klo, khi, llo, lhi), random_function(g, klo, khi, gen),
                 random_function(g, llo, lhi, gen), random_function(g, klo - lhi, khi - llo, gen)};
  for (long k = klo; k <= khi; ++k) {
    for (long l = llo; l <= lhi; ++l) p.f.set(k, l, g.add(g.add(p.kappa.at(k), p.lambda.at(l)), p.mu.at(k - l)));
  }
  return p;
}

// The planted triple moved into the gauge κ(0) = 0, λ(0) = λ(1) = 0 via
// κ + a·k + c1, λ - a·l + c2, μ - a·s - c1 - c2.
inline auto normalize_func1(const PlantedFunc1& p) -> std::array<WindowFn1, 3> {
  const auto& g = p.f.group;
  const auto a = g.sub(p.lambda.at(1), p.lambda.at(0));
  const auto c1 = g.neg(p.kappa.at(0));
  const auto c2 = g.neg(p.lambda.at(0));
  std::array<WindowFn1, 3> out{p.kappa, p.lambda, p.mu};
  for (long t = out[0].lo; t <= out[0].hi; ++t) out[0].set(t, g.add(g.add(p.kappa.at(t), g.scale(t, a)), c1));
  for (long t = out[1].lo; t <= out[1].hi; ++t) out[1].set(t, g.add(g.sub(p.lambda.at(t), g.scale(t, a)), c2));
  for (long t = out[2].lo; t <= out[2].hi; ++t) {
    out[2].set(t, g.sub(g.sub(g.sub(p.mu.at(t), g.scale(t, a)), c1), c2));
  }
  return out;
}

// Affine f_i with the three linear constraints and zero offset sum that make the six-term sum vanish.
struct PlantedEq6 {
  std::array<Range, 3> box;
  std::array<WindowFn1, 6> f;
  std::array<AffineForm, 6> forms;
};

inline auto plant_eq6(Gen& gen) -> PlantedEq6 {
  const auto g = random_target(gen);
  PlantedEq6 p;
  for (auto& r : p.box) {
    r.lo = -gen.integer(0, 3);
    r.hi = r.lo + gen.integer(3, 5);
  }
  const auto s4 = random_element(g, gen);
  const auto s5 = random_element(g, gen);
  const auto s6 = random_element(g, gen);
  p.forms[3].slope = s4;
  p.forms[4].slope = s5;
  p.forms[5].slope = s6;
  p.forms[0].slope = g.neg(g.add(g.add(s4, s5), s6));
  p.forms[1].slope = g.add(s4, s6);
  p.forms[2].slope = g.add(s5, s6);
  auto total = g.zero();
  for (std::size_t i = 0; i < 5; ++i) {
    p.forms[i].offset = random_element(g, gen);
    total = g.add(total, p.forms[i].offset);
  }
  p.forms[5].offset = g.neg(total);
  const auto w = eq6_windows(p.box);
  for (std::size_t i = 0; i < 6; ++i) p.f[i] = affine_function(g, w[i].lo, w[i].hi, p.forms[i]);
  return p;
}

// f1 = g1(k) + g2(k-l) + h(l), f2 = g3(k) + g4(k-l) - h(l), f3 = g1(k) + g3(k-m), f4 = g2(j) + g4(j-m)
// with arbitrary g1..g4 and h.
struct PlantedFunc2 {
  std::array<Range, 3> box;
  std::array<WindowFn2, 4> f;
  WindowFn1 h;
};

inline auto plant_func2(Gen& gen, long radius = 6) -> PlantedFunc2 {
  const auto g = random_target(gen);
  const long R = radius;
  PlantedFunc2 p{{Range{-2, 2}, Range{-2, 2}, Range{-2, 2}}, {}, random_function(g, -R, R, gen)};
  std::array<WindowFn1, 4> gs;
  for (auto& gi : gs) gi = random_function(g, -3 * R, 3 * R, gen);
  for (auto& fi : p.f) fi = WindowFn2(g, -R, R, -R, R);
  for (long x = -R; x <= R; ++x) {
    for (long y = -R; y <= R; ++y) {
      p.f[0].set(x, y, g.add(g.add(gs[0].at(x), gs[1].at(x - y)), p.h.at(y)));
      p.f[1].set(x, y, g.sub(g.add(gs[2].at(x), gs[3].at(x - y)), p.h.at(y)));
      p.f[2].set(x, y, g.add(gs[0].at(x), gs[2].at(x - y)));
      p.f[3].set(x, y, g.add(gs[1].at(x), gs[3].at(x - y)));
    }
  }
  return p;
}

// True when a - b is affine on the common window, i.e. its second difference vanishes.
inline auto differ_by_affine(const WindowFn1& a, const WindowFn1& b) -> bool {
  const auto& g = a.group;
  const long lo = std::max(a.lo, b.lo);
  const long hi = std::min(a.hi, b.hi);
  for (long t = lo; t + 2 <= hi; ++t) {
    const auto d0 = g.sub(a.at(t), b.at(t));
    const auto d1 = g.sub(a.at(t + 1), b.at(t + 1));
    const auto d2 = g.sub(a.at(t + 2), b.at(t + 2));
    if (!g.is_zero(g.add(g.sub(d2, g.scale(2, d1)), d0))) return false;
  }
  return true;
}

// Commuting unipotent actions I + c1·N + c2·N² for one strictly upper triangular N whose band keeps
// N^max_index = 0, optionally modulo a scalar multiple of Z^dim (always a submodule).
inline auto random_nilpotent_module(Gen& gen, std::size_t max_dim = 8, std::size_t max_rank = 3, long max_index = 5)
    -> MatrixModule {
  const auto d = static_cast<std::size_t>(gen.integer(1, static_cast<long>(max_dim)));
  const auto r = static_cast<std::size_t>(gen.integer(1, static_cast<long>(max_rank)));
  const auto band = (d + static_cast<std::size_t>(max_index) - 1) / static_cast<std::size_t>(max_index);
  IntMatrix n(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + band; j < d; ++j) {
      if (gen.coin()) n(i, j) = gen.integer(-2, 2);
    }
  }
  const IntMatrix n2 = n * n;
  std::vector<IntMatrix> action;
  std::vector<IntMatrix> inverses;
  for (std::size_t i = 0; i < r; ++i) {
    const IntMatrix a = IntMatrix::identity(d) + Integer(gen.integer(-2, 2)) * n + Integer(gen.integer(-1, 1)) * n2;
    action.push_back(a);
    inverses.push_back(*unimodular_inverse(a));
  }
  const long c = gen.integer(0, 3);
  if (c < 2) return MatrixModule(d, action, inverses);
  return MatrixModule(d, action, inverses, Lattice::from_matrix(Integer(c) * IntMatrix::identity(d)));
}

}  // namespace tw::test
