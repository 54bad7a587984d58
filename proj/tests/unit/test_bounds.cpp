#include "doctest.h"
#include "support.hpp"
#include "tw/bounds.hpp"

using namespace tw;

namespace {

// Multiplicative formula with exact division at every step, independent of the library binomial.
auto binom_oracle(unsigned n, unsigned k) -> Integer {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

auto pow2(unsigned e) -> Integer {
  Integer r = 1;
  r <<= e;
  return r;
}

}  // namespace

TEST_SUITE("workbench-bounds") {
  TEST_CASE("Schreier bound") {
    CHECK(schreier_bound(35, pow2(20)) == Integer(34) * pow2(20) + 1);
    CHECK(schreier_bound(35, pow2(20)) == 35651585);
    CHECK(schreier_bound(9, 1) == 9);
    CHECK(schreier_bound(1, 77) == 1);
    CHECK_THROWS((void)schreier_bound(0, 3));
    CHECK_THROWS((void)schreier_bound(3, 0));
  }

  TEST_CASE("five-term bound") {
    CHECK(h2_generators(14) == 91);
    CHECK(five_term_bound(91, Integer(34) * pow2(20) + 1) == Integer(17) * pow2(21) + 92);
    CHECK(five_term_bound(0, 12) == 12);
    CHECK(Integer(17) * pow2(21) + 92 - 91 == Integer(34) * pow2(20) + 1);
  }

  TEST_CASE("nilpotent generation bound") {
    CHECK(lemalg_bound(1, 5, 7) == 7);
    CHECK(lemalg_bound(2, 1, 3) == 6);
    CHECK(lemalg_bound(41, 14, 1) == binom_oracle(54, 14));
    CHECK(binom_oracle(54, 14) == pascal_binomial(54, 14));
    CHECK(pascal_binomial(54, 14) == Integer("3245372870670"));
  }

  TEST_CASE("scientific rounding") {
    CHECK(scientific(Integer("115702982084316742920"), 2).to_string() == "1.2e20");
    CHECK(scientific(Integer("340764151420350"), 2).to_string() == "3.4e14");
    CHECK(scientific(995, 2).to_string() == "1.0e3");
    CHECK(scientific(7, 2).to_string() == "7.0e0");
  }

  TEST_CASE("pipeline") {
    const auto r = thm_quant_pipeline();
    CHECK(r.ok());
    const auto b = binom_oracle(54, 14);
    CHECK(r.integer_bound == b * (Integer(17) * pow2(21) + 92));
    CHECK(r.rational_bound == b * 105);
    CHECK(r.integer_bound == Integer("115702982084316742920"));
    CHECK(r.rational_bound == Integer("340764151420350"));
    CHECK(r.value("rank_U3") == 14);
    CHECK(r.value("nilpotency_k") == 41);
    CHECK(r.value("torelli_generators") == 35);
    CHECK(r.value("h1_rational_dim") == 105);
    CHECK(r.integer_scientific.to_string() == "1.2e20");
    CHECK(r.rational_scientific.to_string() == "3.4e14");
    for (const auto& q : r.quantities) CHECK_FALSE(q.formula.empty());
  }
}
