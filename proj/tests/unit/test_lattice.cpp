#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tw/errors.hpp"
#include "tw/lattice.hpp"
#include "tw/normal_form.hpp"

using namespace tw;

namespace {

auto rows(std::vector<IntVector> r, std::size_t cols) -> IntMatrix { return IntMatrix::from_rows(r, cols); }

auto lat(std::vector<IntVector> gens, std::size_t n) -> Lattice { return Lattice::from_generators(n, gens); }

}  // namespace

TEST_SUITE("lattice-core") {
  TEST_CASE("hermite form of the identity is the identity with trivial transform") {
    const auto hf = hermite_normal_form(IntMatrix::identity(3));
    CHECK(hf.h == IntMatrix::identity(3));
    CHECK(hf.u == IntMatrix::identity(3));
    CHECK(hf.rank == 3);
  }

  TEST_CASE("hermite form sorts pivots and keeps them positive") {
    const auto m = rows({{0, 2}, {3, 0}}, 2);
    const auto hf = hermite_normal_form(m);
    CHECK(hf.h == rows({{3, 0}, {0, 2}}, 2));
    CHECK(hf.u * m == hf.h);
    CHECK(abs(determinant(hf.u)) == 1);
  }

  TEST_CASE("hermite form of the zero matrix") {
    const IntMatrix z(2, 3);
    const auto hf = hermite_normal_form(z);
    CHECK(hf.h == z);
    CHECK(hf.rank == 0);
  }

  TEST_CASE("hermite form reduces entries above pivots") {
    const auto hf = hermite_normal_form(rows({{2, 7}, {0, 3}}, 2));
    CHECK(hf.h == rows({{2, 1}, {0, 3}}, 2));
  }

  TEST_CASE("smith form of a diagonal already in form") {
    const auto m = rows({{2, 0}, {0, 4}}, 2);
    const auto s = smith_normal_form(m);
    CHECK(s.d == m);
    CHECK(s.u * m * s.v == s.d);
  }

  TEST_CASE("smith form divides through the content") {
    const auto m = rows({{2, 4}, {6, 8}}, 2);
    const auto s = smith_normal_form(m);
    CHECK(s.d == rows({{2, 0}, {0, 4}}, 2));
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
  }

  TEST_CASE("smith form of the zero matrix") {
    const IntMatrix z(3, 2);
    CHECK(smith_normal_form(z).d == z);
  }

  TEST_CASE("membership returns exact coefficients") {
    CHECK(member(lat({{1, 0}}, 2), {3, 0}) == IntVector{3});
    CHECK_FALSE(member(lat({{2, 0}}, 2), {3, 0}).has_value());
    const auto l = lat({{2, 4}, {0, 6}}, 2);
    const auto c = member(l, {2, 10});
    REQUIRE(c.has_value());
    CHECK(*c == IntVector{1, 1});
  }

  TEST_CASE("membership rejects a vector of the wrong length") {
    CHECK_THROWS_AS((void)member(lat({{1, 0}}, 2), {1, 0, 0}), DimensionError);
  }

  TEST_CASE("saturation examples") {
    CHECK(saturate(lat({{2, 0}}, 2)) == lat({{1, 0}}, 2));
    CHECK(saturate(lat({{2, 4}}, 2)) == lat({{1, 2}}, 2));
    CHECK(saturate(lat({{3, 1}, {1, 5}, {0, 0}}, 2)) == Lattice::full(2));
    CHECK(is_saturated(lat({{1, 2}}, 2)));
    CHECK_FALSE(is_saturated(lat({{2, 4}}, 2)));
  }

  TEST_CASE("sum and intersection examples") {
    auto r = sum_intersect(lat({{1, 0}}, 2), lat({{0, 1}}, 2));
    CHECK(r.sum == Lattice::full(2));
    CHECK(r.intersection.rank() == 0);
    CHECK(r.is_direct);

    r = sum_intersect(lat({{2, 0}}, 2), lat({{1, 0}}, 2));
    CHECK(r.sum == lat({{1, 0}}, 2));
    CHECK(r.intersection == lat({{2, 0}}, 2));
    CHECK_FALSE(r.is_direct);

    // x·(2,2) = y·(2,-2) forces x = y = 0.
    r = sum_intersect(lat({{2, 2}}, 2), lat({{2, -2}}, 2));
    CHECK(r.intersection.rank() == 0);
    CHECK(r.is_direct);
    CHECK(r.sum == lat({{2, 2}, {0, 4}}, 2));
  }

  TEST_CASE("index and cosets of 2Z^2") {
    const auto t = index_and_cosets(lattice_scaled(Lattice::full(2), 2), Lattice::full(2));
    CHECK(t.index() == 4);
    const auto reps = t.reps();
    std::set<IntVector> got(reps.begin(), reps.end());
    CHECK(got == std::set<IntVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  }

  TEST_CASE("index errors") {
    CHECK_THROWS_AS((void)lattice_index(lat({{1, 0}}, 2), lat({{2, 0}}, 2)), PreconditionError);
    CHECK_THROWS_AS((void)lattice_index(lat({{1, 0}}, 2), Lattice::full(2)), PreconditionError);
  }

  TEST_CASE("kernels") {
    const auto a = rows({{1, 2, 3}}, 3);
    const auto k = integer_kernel(a);
    CHECK(k.rank() == 2);
    for (const auto& r : k.basis().row_vectors()) CHECK(is_zero(a.apply(r)));
    CHECK(is_saturated(k));
    const auto lk = left_kernel(rows({{1, 1}, {2, 2}}, 2));
    CHECK(lk == lat({{2, -1}}, 2));
  }

  TEST_CASE("quotient presentation projects and lifts exactly") {
    const QuotientPresentation q(lat({{1, 1, 0}}, 3));
    CHECK(q.dimension() == 2);
    for (const IntVector c : {IntVector{1, 0}, IntVector{0, 1}, IntVector{-3, 5}}) CHECK(q.project(q.lift(c)) == c);
    CHECK(is_zero(q.project({2, 2, 0})));
    CHECK_THROWS_AS(QuotientPresentation(lat({{2, 0, 0}}, 3)), PreconditionError);
  }

  TEST_CASE("unimodular inverse") {
    const auto m = rows({{2, 1}, {1, 1}}, 2);
    const auto inv = unimodular_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == IntMatrix::identity(2));
    CHECK_FALSE(unimodular_inverse(rows({{2, 0}, {0, 1}}, 2)).has_value());
  }
}
