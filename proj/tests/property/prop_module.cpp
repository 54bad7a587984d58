#include "doctest.h"
#include "generators.hpp"
#include "tw/module.hpp"
#include "tw/ring.hpp"

using namespace tw;
using tw::test::Gen;

namespace {

auto random_ring_element(Gen& gen, std::size_t rank) -> RingElement {
  RingElement p(rank);
  const auto terms = gen.integer(0, 4);
  for (long t = 0; t < terms; ++t) {
    Exponent a(rank);
    for (auto& x : a) x = gen.integer(-2, 2);
    p.add_term(a, gen.integer(-3, 3));
  }
  return p;
}

auto acts_trivially(const MatrixModule& m) -> bool {
  for (std::size_t i = 0; i < m.rank_A(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto e = unit_vector(m.dim(), j);
      if (!m.equal(m.action(i).apply(e), e)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("property: laurent-modules") {
  TEST_CASE("the group ring acts: products compose and sums add") {
    Gen gen(21);
    for (int trial = 0; trial < 150; ++trial) {
      const auto m = tw::test::random_nilpotent_module(gen);
      const auto p = random_ring_element(gen, m.rank_A());
      const auto q = random_ring_element(gen, m.rank_A());
      const auto x = gen.vector(m.dim(), -5, 5);
      CHECK(m.equal(act(p * q, x, m), act(p, act(q, x, m), m)));
      CHECK(m.equal(act(p + q, x, m), add(act(p, x, m), act(q, x, m))));
      CHECK(m.equal(act(RingElement::one(m.rank_A()), x, m), x));
    }
  }

  TEST_CASE("ring multiplication is commutative and evaluation is a homomorphism") {
    Gen gen(22);
    for (int trial = 0; trial < 200; ++trial) {
      const auto r = static_cast<std::size_t>(gen.integer(1, 3));
      const auto p = random_ring_element(gen, r);
      const auto q = random_ring_element(gen, r);
      CHECK(p * q == q * p);
      std::vector<Integer> pt(r);
      for (auto& x : pt) x = gen.coin() ? 1 : -1;
      CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
      CHECK((p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt));
    }
  }

  TEST_CASE("nilpotency index one exactly for trivial actions") {
    Gen gen(23);
    for (int trial = 0; trial < 150; ++trial) {
      const auto m = tw::test::random_nilpotent_module(gen);
      const auto k = nilpotency_index(m, 16);
      REQUIRE(k.has_value());
      CHECK(*k <= 5);
      CHECK((*k <= 1) == acts_trivially(m));
    }
  }

  TEST_CASE("f_bk of total degree k - 1 ignores the A-action") {
    Gen gen(24);
    for (int trial = 0; trial < 150; ++trial) {
      const auto m = tw::test::random_nilpotent_module(gen);
      const int k = *nilpotency_index(m, 16);
      if (k < 1) continue;
      std::vector<int> bk(m.rank_A(), 0);
      for (int s = 0; s < k - 1; ++s) ++bk[gen.index(bk.size())];
      const auto x = gen.vector(m.dim(), -5, 5);
      Exponent a(m.rank_A());
      for (auto& e : a) e = gen.integer(-3, 3);
      CHECK(m.equal(f_bk(m, m.apply_monomial(a, x), bk), f_bk(m, x, bk)));
      // Every value of f_bk is invariant.
      const auto y = f_bk(m, x, bk);
      for (std::size_t i = 0; i < m.rank_A(); ++i) CHECK(m.equal(m.action(i).apply(y), y));
    }
  }

  TEST_CASE("generating sets stay within the bound and span") {
    Gen gen(25);
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = tw::test::random_nilpotent_module(gen);
      const auto res = lemalg_generating_set(m);
      CHECK(Integer(static_cast<unsigned long>(res.generators.size())) <= res.bound);
      CHECK(spans_module(m, res.generators));
    }
  }

  TEST_CASE("certificates from the nilpotency index verify") {
    Gen gen(26);
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = tw::test::random_nilpotent_module(gen);
      const int k = std::max(1, *nilpotency_index(m, 16));
      FGCertificate cert;
      for (std::size_t i = 0; i < m.rank_A(); ++i) {
        IntVector a(m.rank_A());
        a[i] = 1;
        cert.directions.emplace_back(a, k);
      }
      const auto x = gen.vector(m.dim(), -4, 4);
      const auto res = fg_from_certificate(m, x, cert);
      CHECK(res.verified);
      CHECK(res.index == 1);
      CHECK(closed_under_action(m, res.generators));
    }
  }
}
