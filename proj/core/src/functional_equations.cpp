#include "tw/functional_equations.hpp"

#include <algorithm>
#include <string>

namespace tw {
namespace {

auto cell_str(long k, long l) -> std::string { return "(" + std::to_string(k) + ", " + std::to_string(l) + ")"; }

auto eq_func1_holds_at(const WindowFn2& f, long k, long l) -> bool {
  const auto& g = f.group;
  auto lhs = g.add(g.add(f.at(k + 1, l), f.at(k, l + 1)), f.at(k - 1, l - 1));
  auto rhs = g.add(g.add(f.at(k - 1, l), f.at(k, l - 1)), f.at(k + 1, l + 1));
  return lhs == rhs;
}

auto range_of(long lo, long hi) -> Range { return Range{lo, hi}; }

// Range of c0·x0 + c1·x1 + ... over a box.
template <std::size_t N>
auto linear_range(const std::array<int, N>& coeffs, const std::array<Range, N>& box) -> Range {
  long lo = 0;
  long hi = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const long a = coeffs[i] * box[i].lo;
    const long b = coeffs[i] * box[i].hi;
    lo += std::min(a, b);
    hi += std::max(a, b);
  }
  return {lo, hi};
}

void require_box(const Range& r, const char* name) {
  if (r.hi < r.lo) throw PreconditionError(std::string("empty range for ") + name);
}

}  // namespace

auto restrict_window(const WindowFn1& f, long lo, long hi, const std::string& name) -> WindowFn1 {
  if (lo < f.lo || hi > f.hi) {
    throw PreconditionError(name + " is given on [" + std::to_string(f.lo) + ", " + std::to_string(f.hi) +
                            "] but needed on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  WindowFn1 g(f.group, lo, hi);
  for (long t = lo; t <= hi; ++t) g.set(t, f.at(t));
  return g;
}

auto eq_func1_violation(const WindowFn2& f) -> std::optional<Cell2> {
  for (long k = f.klo + 1; k < f.khi; ++k) {
    for (long l = f.llo + 1; l < f.lhi; ++l) {
      if (!eq_func1_holds_at(f, k, l)) return Cell2{k, l};
    }
  }
  return std::nullopt;
}

auto Decomposition2::defined_at(long k, long l) const -> bool {
  return kappa.contains(k) && lambda.contains(l) && mu.contains(k - l);
}

auto Decomposition2::value(long k, long l) const -> GroupElement {
  const auto& g = kappa.group;
  return g.add(g.add(kappa.at(k), lambda.at(l)), mu.at(k - l));
}

auto solve_eq_func1(const WindowFn2& f) -> Decomposition2 {
  if (!(f.klo <= 0 && 0 <= f.khi)) throw PreconditionError("box must contain k = 0");
  if (!(f.llo <= 0 && f.lhi >= 1)) throw PreconditionError("box too thin: rows l = 0 and l = 1 are required");
  if (auto bad = eq_func1_violation(f)) {
    throw EquationViolated("three-term equation fails at " + cell_str(bad->k, bad->l), {bad->k, bad->l});
  }
  const auto& g = f.group;
  Decomposition2 d;
  d.kappa = WindowFn1(g, f.klo, f.khi);
  // κ(k) - κ(k-1) = f(k,1) - f(k-1,0), κ(0) = 0.
  for (long k = 1; k <= f.khi; ++k) d.kappa.set(k, g.add(d.kappa.at(k - 1), g.sub(f.at(k, 1), f.at(k - 1, 0))));
  for (long k = 0; k > f.klo; --k) d.kappa.set(k - 1, g.add(g.sub(d.kappa.at(k), f.at(k, 1)), f.at(k - 1, 0)));
  d.mu = WindowFn1(g, f.klo, f.khi);
  for (long k = f.klo; k <= f.khi; ++k) d.mu.set(k, g.sub(f.at(k, 0), d.kappa.at(k)));
  // λ(l) = f(0,l) - μ(-l) where μ(-l) exists; λ(0) = λ(1) = 0.
  const long lam_lo = std::max(f.llo, -f.khi);
  const long lam_hi = std::max(std::min(f.lhi, -f.klo), 1L);
  d.lambda = WindowFn1(g, lam_lo, lam_hi);
  for (long l = lam_lo; l <= lam_hi; ++l) {
    if (l == 0 || l == 1) continue;
    d.lambda.set(l, g.sub(f.at(0, l), d.mu.at(-l)));
  }
  for (long k = f.klo; k <= f.khi; ++k) {
    for (long l = f.llo; l <= f.lhi; ++l) {
      if (!d.defined_at(k, l)) continue;
      if (d.value(k, l) != f.at(k, l)) {
        throw CheckFailure("decomposition does not reproduce f at " + cell_str(k, l));
      }
      ++d.verified_cells;
    }
  }
  auto square_inside = [&](long r) {
    for (long k = -r; k <= r; ++k) {
      for (long l = -r; l <= r; ++l) {
        if (!f.contains(k, l) || !d.defined_at(k, l)) return false;
      }
    }
    return true;
  };
  while (square_inside(d.centered_radius + 1)) ++d.centered_radius;
  return d;
}

auto decomposition_residual(const WindowFn2& f, const Decomposition2& d) -> WindowFn2 {
  WindowFn2 r(f.group, f.klo, f.khi, f.llo, f.lhi);
  for (long k = f.klo; k <= f.khi; ++k) {
    for (long l = f.llo; l <= f.lhi; ++l) {
      if (d.defined_at(k, l)) r.set(k, l, f.group.sub(f.at(k, l), d.value(k, l)));
    }
  }
  return r;
}

auto boundary_uniqueness_check(const WindowFn2& f) -> UniquenessReport {
  if (!(f.klo <= 0 && 0 <= f.khi && f.llo <= 0 && f.lhi >= 1)) {
    throw PreconditionError("box must contain column k = 0 and rows l = 0, 1");
  }
  if (auto bad = eq_func1_violation(f)) {
    throw PreconditionError("three-term equation fails at " + cell_str(bad->k, bad->l));
  }
  for (long k = f.klo; k <= f.khi; ++k) {
    if (!f.group.is_zero(f.at(k, 0)) || !f.group.is_zero(f.at(k, 1))) {
      throw PreconditionError("f does not vanish on rows l = 0, 1 at k = " + std::to_string(k));
    }
  }
  for (long l = f.llo; l <= f.lhi; ++l) {
    if (!f.group.is_zero(f.at(0, l))) throw PreconditionError("f does not vanish on column k = 0 at l = " + std::to_string(l));
  }

  const long width = f.khi - f.klo + 1;
  const long height = f.lhi - f.llo + 1;
  std::vector<char> known(static_cast<std::size_t>(width * height), 0);
  auto slot = [&](long k, long l) -> char& { return known[static_cast<std::size_t>((k - f.klo) * height + (l - f.llo))]; };
  auto is_known = [&](long k, long l) { return f.contains(k, l) && slot(k, l) != 0; };
  for (long k = f.klo; k <= f.khi; ++k) slot(k, 0) = slot(k, 1) = 1;
  for (long l = f.llo; l <= f.lhi; ++l) slot(0, l) = 1;

  UniquenessReport report;
  // links[k - klo] joins cells (k, row) and (k + 1, row); zero spreads from (0, row) along links.
  auto spread = [&](long row, const std::vector<char>& links) {
    for (long k = 0; k < f.khi && links[static_cast<std::size_t>(k - f.klo)]; ++k) {
      if (!slot(k + 1, row)) ++report.derived_cells;
      slot(k + 1, row) = 1;
    }
    for (long k = 0; k > f.klo && links[static_cast<std::size_t>(k - 1 - f.klo)]; --k) {
      if (!slot(k - 1, row)) ++report.derived_cells;
      slot(k - 1, row) = 1;
    }
  };
  // Rows l-1 and l vanish, so the equation at (k, l) reads f(k, l+1) = f(k+1, l+1).
  for (long l = 1; l + 1 <= f.lhi && l > f.llo; ++l) {
    std::vector<char> links(static_cast<std::size_t>(width), 0);
    for (long k = f.klo + 1; k < f.khi; ++k) {
      links[static_cast<std::size_t>(k - f.klo)] =
          is_known(k + 1, l) && is_known(k - 1, l - 1) && is_known(k - 1, l) && is_known(k, l - 1);
    }
    spread(l + 1, links);
  }
  // Rows l and l+1 vanish, so the equation at (k, l) reads f(k-1, l-1) = f(k, l-1).
  for (long l = 0; l - 1 >= f.llo && l < f.lhi; --l) {
    std::vector<char> links(static_cast<std::size_t>(width), 0);
    for (long k = f.klo + 1; k < f.khi; ++k) {
      links[static_cast<std::size_t>(k - 1 - f.klo)] =
          is_known(k + 1, l) && is_known(k, l + 1) && is_known(k - 1, l) && is_known(k + 1, l + 1);
    }
    spread(l - 1, links);
  }

  auto scan_row = [&](long l) -> bool {
    for (long k = f.klo; k <= f.khi; ++k) {
      if (!f.group.is_zero(f.at(k, l))) {
        report.first_nonzero = Cell2{k, l};
        return true;
      }
    }
    return false;
  };
  for (long l = 2; l <= f.lhi; ++l) {
    if (scan_row(l)) return report;
  }
  for (long l = -1; l >= f.llo; --l) {
    if (scan_row(l)) return report;
  }
  return report;
}

auto eq6_windows(const std::array<Range, 3>& box) -> std::array<Range, 6> {
  using C = std::array<int, 3>;
  return {linear_range(C{1, 0, 0}, box), linear_range(C{0, 1, 0}, box), linear_range(C{0, 0, 1}, box),
          linear_range(C{1, -1, 0}, box), linear_range(C{1, 0, -1}, box), linear_range(C{1, -1, -1}, box)};
}

auto solve_eq6(const std::array<WindowFn1, 6>& f, const std::array<Range, 3>& box) -> std::array<AffineForm, 6> {
  for (const auto& r : box) require_box(r, "the six-term box");
  for (const auto& r : box) {
    if (r.length() < 3) throw PreconditionError("windows too small for degree certification: box extents must be >= 3");
  }
  const auto& g = f[0].group;
  for (const auto& fi : f) {
    if (!(fi.group == g)) throw DimensionError("all six functions must share a target group");
  }
  const auto windows = eq6_windows(box);
  std::array<WindowFn1, 6> w;
  for (std::size_t i = 0; i < 6; ++i) w[i] = restrict_window(f[i], windows[i].lo, windows[i].hi, "f" + std::to_string(i + 1));

  for (long k = box[0].lo; k <= box[0].hi; ++k) {
    for (long l = box[1].lo; l <= box[1].hi; ++l) {
      for (long m = box[2].lo; m <= box[2].hi; ++m) {
        GroupElement s = g.zero();
        s = g.add(s, w[0].at(k));
        s = g.add(s, w[1].at(l));
        s = g.add(s, w[2].at(m));
        s = g.add(s, w[3].at(k - l));
        s = g.add(s, w[4].at(k - m));
        s = g.add(s, w[5].at(k - l - m));
        if (!g.is_zero(s)) {
          throw EquationViolated("six-term equation fails at (" + std::to_string(k) + ", " + std::to_string(l) +
                                     ", " + std::to_string(m) + ")",
                                 {k, l, m});
        }
      }
    }
  }

  std::array<AffineForm, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto deg = poly_degree(w[i], 1);
    if (!deg) throw CheckFailure("f" + std::to_string(i + 1) + " is not affine on its window");
    const long t0 = w[i].lo;
    out[i].slope = g.sub(w[i].at(t0 + 1), w[i].at(t0));
    out[i].offset = g.sub(w[i].at(t0), g.scale(t0, out[i].slope));
    for (long t = w[i].lo; t <= w[i].hi; ++t) {
      if (g.add(g.scale(t, out[i].slope), out[i].offset) != w[i].at(t)) {
        throw CheckFailure("affine form of f" + std::to_string(i + 1) + " does not reproduce its window");
      }
    }
  }
  // Coefficients of k, l, m and the constant in the composed sum.
  const auto& a = out;
  const auto k_coeff = g.add(g.add(a[0].slope, a[3].slope), g.add(a[4].slope, a[5].slope));
  const auto l_coeff = g.sub(g.sub(a[1].slope, a[3].slope), a[5].slope);
  const auto m_coeff = g.sub(g.sub(a[2].slope, a[4].slope), a[5].slope);
  GroupElement c = g.zero();
  for (const auto& form : a) c = g.add(c, form.offset);
  if (!g.is_zero(k_coeff) || !g.is_zero(l_coeff) || !g.is_zero(m_coeff) || !g.is_zero(c)) {
    throw CheckFailure("composed affine forms do not cancel identically");
  }
  return out;
}

auto eq9_windows(const std::array<Range, 4>& box) -> std::array<Range, 10> {
  using C = std::array<int, 4>;
  const std::array<C, 10> forms{C{1, 0, 0, 1},  C{1, -1, 0, 1},  C{1, 0, -1, 1},  C{1, 0, 0, 0},
                                C{1, -1, 0, 0}, C{1, 0, -1, 0},  C{1, -1, -1, 0}, C{1, -1, 0, -1},
                                C{1, 0, -1, -1}, C{1, -1, -1, -1}};
  std::array<Range, 10> out;
  for (std::size_t i = 0; i < 10; ++i) out[i] = linear_range(forms[i], box);
  return out;
}

auto Eq9Report::certified() const -> bool {
  return std::all_of(entries.begin(), entries.end(), [](const Eq9Entry& e) { return e.certified(); });
}

auto check_eq9(const std::array<WindowFn1, 10>& f, const std::array<Range, 4>& box) -> Eq9Report {
  for (const auto& r : box) require_box(r, "the ten-term box");
  const auto& g = f[0].group;
  for (const auto& fi : f) {
    if (!(fi.group == g)) throw DimensionError("all ten functions must share a target group");
  }
  const auto windows = eq9_windows(box);
  std::array<WindowFn1, 10> w;
  for (std::size_t i = 0; i < 10; ++i) w[i] = restrict_window(f[i], windows[i].lo, windows[i].hi, "f" + std::to_string(i + 1));

  for (long t = box[0].lo; t <= box[0].hi; ++t) {
    for (long k = box[1].lo; k <= box[1].hi; ++k) {
      for (long l = box[2].lo; l <= box[2].hi; ++l) {
        for (long m = box[3].lo; m <= box[3].hi; ++m) {
          const std::array<long, 10> args{t + m, t - k + m, t - l + m, t, t - k, t - l, t - k - l, t - k - m,
                                          t - l - m, t - k - l - m};
          GroupElement s = g.zero();
          for (std::size_t i = 0; i < 10; ++i) s = g.add(s, w[i].at(args[i]));
          if (!g.is_zero(s)) {
            throw EquationViolated("ten-term equation fails at (t, k, l, m) = (" + std::to_string(t) + ", " +
                                       std::to_string(k) + ", " + std::to_string(l) + ", " + std::to_string(m) + ")",
                                   {t, k, l, m});
          }
        }
      }
    }
  }

  Eq9Report report;
  for (std::size_t i = 0; i < 10; ++i) {
    auto& e = report.entries[i];
    e.window = windows[i];
    e.must_be_polynomial = (i == 0 || i == 3 || i == 6 || i == 9);
    if (e.window.hi - e.window.lo < 4) {
      throw PreconditionError("window of f" + std::to_string(i + 1) + " too short to certify degree 2");
    }
    e.quasi_degree = quasipoly_degree(w[i], 2);
    e.poly_degree = poly_degree(w[i], 2);
  }
  return report;
}

auto solve_eq_func2(const std::array<WindowFn2, 4>& f, const std::array<Range, 3>& box) -> Func2Solution {
  for (const auto& r : box) require_box(r, "the four-function box");
  const auto& g = f[0].group;
  for (const auto& fi : f) {
    if (!(fi.group == g)) throw DimensionError("all four functions must share a target group");
  }
  const Range K = box[0];
  const Range L = box[1];
  const Range M = box[2];
  auto need = [&](std::size_t i, Range a, Range b) {
    const auto& fi = f[i];
    if (a.lo < fi.klo || a.hi > fi.khi || b.lo < fi.llo || b.hi > fi.lhi) {
      throw PreconditionError("f" + std::to_string(i + 1) + " does not cover the arguments the box induces");
    }
  };
  need(0, K, L);
  need(1, range_of(K.lo - M.hi, K.hi - M.lo), L);
  need(2, K, M);
  need(3, range_of(K.lo - L.hi, K.hi - L.lo), M);
  for (long k = K.lo; k <= K.hi; ++k) {
    for (long l = L.lo; l <= L.hi; ++l) {
      for (long m = M.lo; m <= M.hi; ++m) {
        const auto lhs = g.add(f[0].at(k, l), f[1].at(k - m, l));
        const auto rhs = g.add(f[2].at(k, m), f[3].at(k - l, m));
        if (lhs != rhs) {
          throw EquationViolated("four-function equation fails at (" + std::to_string(k) + ", " + std::to_string(l) +
                                     ", " + std::to_string(m) + ")",
                                 {k, l, m});
        }
      }
    }
  }

  // Each f_i satisfies the three-term equation; decompose all four.
  std::array<Decomposition2, 4> d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = solve_eq_func1(f[i]);

  // The decomposed equation is a six-term equation in (k, l, m).
  const auto windows = eq6_windows(box);
  auto combine = [&](const Range& r, const std::string& name, auto&& value) {
    WindowFn1 out(g, r.lo, r.hi);
    for (long t = r.lo; t <= r.hi; ++t) out.set(t, value(t));
    (void)name;
    return out;
  };
  auto at = [&](const WindowFn1& w, long t, const char* name) -> const GroupElement& {
    if (!w.contains(t)) {
      throw PreconditionError(std::string("windows too small: ") + name + " is not available at " + std::to_string(t));
    }
    return w.at(t);
  };
  std::array<WindowFn1, 6> six{
      combine(windows[0], "F1", [&](long t) { return g.sub(at(d[0].kappa, t, "kappa1"), at(d[2].kappa, t, "kappa3")); }),
      combine(windows[1], "F2", [&](long t) { return g.add(at(d[0].lambda, t, "lambda1"), at(d[1].lambda, t, "lambda2")); }),
      combine(windows[2], "F3", [&](long t) { return g.neg(g.add(at(d[2].lambda, t, "lambda3"), at(d[3].lambda, t, "lambda4"))); }),
      combine(windows[3], "F4", [&](long t) { return g.sub(at(d[0].mu, t, "mu1"), at(d[3].kappa, t, "kappa4")); }),
      combine(windows[4], "F5", [&](long t) { return g.sub(at(d[1].kappa, t, "kappa2"), at(d[2].mu, t, "mu3")); }),
      combine(windows[5], "F6", [&](long t) { return g.sub(at(d[1].mu, t, "mu2"), at(d[3].mu, t, "mu4")); }),
  };
  const auto forms = solve_eq6(six, box);

  Func2Solution s;
  s.a = forms[1].slope;
  s.b = forms[1].offset;
  s.g1 = d[0].kappa;
  s.g2 = d[0].mu;
  s.h = d[0].lambda;
  s.g3 = d[1].kappa;
  for (long k = s.g3.lo; k <= s.g3.hi; ++k) s.g3.set(k, g.add(g.add(s.g3.at(k), g.scale(k, s.a)), s.b));
  s.g4 = d[1].mu;
  for (long k = s.g4.lo; k <= s.g4.hi; ++k) s.g4.set(k, g.sub(s.g4.at(k), g.scale(k, s.a)));

  for (long k = f[0].klo; k <= f[0].khi; ++k) {
    for (long l = f[0].llo; l <= f[0].lhi; ++l) {
      if (!(s.g1.contains(k) && s.g2.contains(k - l) && s.h.contains(l))) continue;
      const auto v = g.add(g.add(s.g1.at(k), s.g2.at(k - l)), s.h.at(l));
      if (v != f[0].at(k, l)) throw CheckFailure("f1 not reproduced at " + cell_str(k, l));
      ++s.verified_cells;
    }
  }
  for (long k = f[1].klo; k <= f[1].khi; ++k) {
    for (long l = f[1].llo; l <= f[1].lhi; ++l) {
      if (!(s.g3.contains(k) && s.g4.contains(k - l) && s.h.contains(l))) continue;
      const auto v = g.sub(g.add(s.g3.at(k), s.g4.at(k - l)), s.h.at(l));
      if (v != f[1].at(k, l)) throw CheckFailure("f2 not reproduced at " + cell_str(k, l));
      ++s.verified_cells;
    }
  }
  return s;
}

}  // namespace tw
