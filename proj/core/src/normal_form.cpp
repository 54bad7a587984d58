#include "tw/normal_form.hpp"

#include <algorithm>
#include <utility>

#include "tw/errors.hpp"

namespace tw {
namespace {

auto cmpabs(const Integer& a, const Integer& b) -> int { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Row i -= q * row p, restricted to columns >= from for the reduced matrix.
void row_submul(IntMatrix& m, std::size_t i, const Integer& q, std::size_t p, std::size_t from) {
  if (sgn(q) == 0) return;
  auto& ri = m.row(i);
  const auto& rp = m.row(p);
  for (std::size_t j = from; j < m.cols(); ++j) {
    if (sgn(rp[j]) != 0) mpz_submul(ri[j].get_mpz_t(), q.get_mpz_t(), rp[j].get_mpz_t());
  }
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (auto& x : m.row(i)) x = -x;
}

auto hermite_impl(const IntMatrix& m, bool track) -> HermiteForm {
  HermiteForm out;
  out.h = m;
  if (track) out.u = IntMatrix::identity(m.rows());
  auto& h = out.h;
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    bool found = false;
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (sgn(h(i, j)) == 0) continue;
        if (best == h.rows() || cmpabs(h(i, j), h(best, j)) < 0) best = i;
      }
      if (best == h.rows()) break;
      found = true;
      if (best != r) {
        h.swap_rows(best, r);
        if (track) out.u.swap_rows(best, r);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (sgn(h(i, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
        row_submul(h, i, q, r, j);
        if (track) row_submul(out.u, i, q, r, 0);
        if (sgn(h(i, j)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (sgn(h(r, j)) < 0) {
      negate_row(h, r);
      if (track) negate_row(out.u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(h(i, j)) == 0) continue;
      Integer q = floor_div(h(i, j), h(r, j));
      row_submul(h, i, q, r, j);
      if (track) row_submul(out.u, i, q, r, 0);
    }
    out.pivots.push_back(j);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace

auto hermite_normal_form(const IntMatrix& m) -> HermiteForm { return hermite_impl(m, true); }

auto hermite_basis(const IntMatrix& m) -> HermiteForm { return hermite_impl(m, false); }

auto smith_normal_form(const IntMatrix& m) -> SmithForm {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  auto& d = s.d;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  // Column operations act on d and v; expressed through transposed helpers.
  auto col_submul = [&](std::size_t j, const Integer& q, std::size_t p) {
    if (sgn(q) == 0) return;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(d(i, p)) != 0) mpz_submul(d(i, j).get_mpz_t(), q.get_mpz_t(), d(i, p).get_mpz_t());
    }
    for (std::size_t i = 0; i < cols; ++i) {
      if (sgn(s.v(i, p)) != 0) mpz_submul(s.v(i, j).get_mpz_t(), q.get_mpz_t(), s.v(i, p).get_mpz_t());
    }
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(s.v(i, a), s.v(i, b));
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_rows(a, b);
    s.u.swap_rows(a, b);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto place_min = [&]() -> bool {
      std::size_t bi = rows;
      std::size_t bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (bi == rows || cmpabs(d(i, j), d(bi, bj)) < 0) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return false;
      swap_rows(t, bi);
      swap_cols(t, bj);
      return true;
    };
    if (!place_min()) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_submul(d, i, q, t, t);
        row_submul(s.u, i, q, t, 0);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_submul(j, q, t);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survives in row or column t.
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      row_submul(d, t, Integer(-1), bad, 0);
      row_submul(s.u, t, Integer(-1), bad, 0);
    }
    if (sgn(d(t, t)) < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
  }
  return s;
}

auto smith_invariants(const IntMatrix& m) -> std::vector<Integer> {
  const auto s = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.push_back(s.d(i, i));
  return out;
}

auto determinant(const IntMatrix& m) -> Integer {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

auto unimodular_inverse(const IntMatrix& m) -> std::optional<IntMatrix> {
  if (m.rows() != m.cols()) return std::nullopt;
  auto hf = hermite_normal_form(m);
  if (hf.h != IntMatrix::identity(m.rows())) return std::nullopt;
  return hf.u;
}

}  // namespace tw
