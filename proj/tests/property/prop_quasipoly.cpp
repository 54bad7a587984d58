#include "doctest.h"
#include "generators.hpp"
#include "tw/functional_equations.hpp"
#include "tw/quasipoly.hpp"

using namespace tw;
using tw::test::Gen;

namespace {

// Compare on the overlap of the two windows.
auto agree(const WindowFn1& a, const WindowFn1& b) -> bool {
  const long lo = std::max(a.lo, b.lo);
  const long hi = std::min(a.hi, b.hi);
  if (lo > hi) return false;
  for (long t = lo; t <= hi; ++t) {
    if (a.at(t) != b.at(t)) return false;
  }
  return true;
}

auto random_poly(Gen& gen, const TargetGroup& g, int degree) -> BinomialPoly {
  BinomialPoly p{g, {}};
  for (int i = 0; i <= degree; ++i) p.coefficients.push_back(tw::test::random_element(g, gen));
  // The top coefficient must be nonzero for the degree to be exact.
  while (g.is_zero(p.coefficients.back())) p.coefficients.back() = tw::test::random_element(g, gen);
  return p;
}

}  // namespace

TEST_SUITE("property: quasipoly") {
  TEST_CASE("difference operators commute with shifts and with each other") {
    Gen gen(31);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = tw::test::random_target(gen);
      const auto f = tw::test::random_function(g, -10, 10, gen);
      CHECK(agree(apply_operator({Op::Delta(), Op::T()}, f), apply_operator({Op::T(), Op::Delta()}, f)));
      CHECK(agree(apply_operator({Op::Delta(), Op::T_inv()}, f), apply_operator({Op::T_inv(), Op::Delta()}, f)));
      const long h1 = gen.integer(1, 3);
      const long h2 = gen.integer(1, 3);
      CHECK(agree(apply_operator({Op::Delta_h(h1), Op::Delta_h(h2)}, f),
                  apply_operator({Op::Delta_h(h2), Op::Delta_h(h1)}, f)));
      CHECK(agree(apply_operator({Op::T(), Op::T_inv()}, f), f));
    }
  }

  TEST_CASE("binomial fits are unique and recover the degree") {
    Gen gen(32);
    for (int trial = 0; trial < 150; ++trial) {
      const auto g = tw::test::random_target(gen);
      const int d = static_cast<int>(gen.integer(0, 4));
      const auto p = random_poly(gen, g, d);
      const long lo = gen.integer(-6, 3);
      const auto f = tabulate(p, lo, lo + 9);
      const auto fit = binomial_fit(f);
      CHECK(fit.coefficients == p.coefficients);
      CHECK(poly_degree(f, 5) == d);
      // (T+1)Δ^d f = 2·b_d, so a top coefficient of order two lowers the quasi-polynomial degree.
      const auto q = quasipoly_degree(f, 5);
      REQUIRE(q.has_value());
      CHECK(*q == (d > 0 && g.is_zero(g.scale(2, p.coefficients.back())) ? d - 1 : d));
      for (long t = lo; t <= lo + 9; ++t) CHECK(fit.evaluate(t) == f.at(t));
    }
  }

  TEST_CASE("quasi-polynomial degree is shift invariant") {
    Gen gen(33);
    for (int trial = 0; trial < 150; ++trial) {
      const auto g = tw::test::random_target(gen);
      // p(t) + c·floor(t/2) + e·[t odd] has quasi-polynomial degree at most max(deg p, 1).
      const auto p = random_poly(gen, g, static_cast<int>(gen.integer(0, 3)));
      const auto c = tw::test::random_element(g, gen);
      const auto e = tw::test::random_element(g, gen);
      WindowFn1 f(g, -8, 8);
      for (long t = -8; t <= 8; ++t) {
        const long half = t >= 0 ? t / 2 : -((1 - t) / 2);
        auto v = g.add(p.evaluate(t), g.scale(half, c));
        if (t % 2 != 0) v = g.add(v, e);
        f.set(t, v);
      }
      const auto q = quasipoly_degree(f, 5);
      REQUIRE(q.has_value());
      CHECK(*q <= std::max(p.degree(), 1));
      CHECK(quasipoly_degree(apply_operator({Op::T()}, f), 5) == q);
      CHECK(quasipoly_degree(apply_operator({Op::T_inv()}, f), 5) == q);
      if (g.is_zero(c) && g.is_zero(e)) CHECK(*q == p.degree());
      if (const auto pd = poly_degree(f, 5)) CHECK(*q <= *pd);
    }
  }

  TEST_CASE("three-term round trip recovers the planted decomposition in gauge") {
    Gen gen(34);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = tw::test::plant_func1(gen);
      CHECK_FALSE(eq_func1_violation(p.f).has_value());
      const auto d = solve_eq_func1(p.f);
      CHECK(decomposition_residual(p.f, d).is_zero());
      const auto expect = tw::test::normalize_func1(p);
      CHECK(agree(d.kappa, expect[0]));
      CHECK(agree(d.lambda, expect[1]));
      CHECK(agree(d.mu, expect[2]));
    }
  }

  TEST_CASE("six-term round trip returns the planted affine forms") {
    Gen gen(35);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = tw::test::plant_eq6(gen);
      const auto forms = solve_eq6(p.f, p.box);
      for (std::size_t i = 0; i < 6; ++i) CHECK(forms[i] == p.forms[i]);
    }
  }

  TEST_CASE("four-function round trip reproduces the inputs") {
    Gen gen(36);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = tw::test::plant_func2(gen);
      const auto s = solve_eq_func2(p.f, p.box);
      CHECK(s.verified_cells > 0);
      CHECK(tw::test::differ_by_affine(s.h, p.h));
    }
  }

  TEST_CASE("perturbing one cell of a planted solution is detected") {
    Gen gen(37);
    for (int trial = 0; trial < 100; ++trial) {
      auto p = tw::test::plant_func1(gen);
      const auto& g = p.f.group;
      const long k = gen.integer(p.f.klo + 1, p.f.khi - 1);
      const long l = gen.integer(p.f.llo + 1, p.f.lhi - 1);
      auto bump = tw::test::random_element(g, gen);
      while (g.is_zero(bump)) bump = tw::test::random_element(g, gen);
      p.f.set(k, l, g.add(p.f.at(k, l), bump));
      CHECK(eq_func1_violation(p.f).has_value());
    }
  }
}
