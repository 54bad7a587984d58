#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tw/integer.hpp"
#include "tw/matrix.hpp"

namespace tw::test {

// Seeded source for property tests; every draw is reproducible from the seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  auto integer(long lo, long hi) -> long { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  auto coin() -> bool { return integer(0, 1) == 1; }
  auto index(std::size_t n) -> std::size_t { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  auto vector(std::size_t n, long lo, long hi) -> IntVector {
    IntVector v(n);
    for (auto& x : v) x = integer(lo, hi);
    return v;
  }
  auto matrix(std::size_t rows, std::size_t cols, long lo, long hi) -> IntMatrix {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.row(i) = vector(cols, lo, hi);
    return m;
  }
  // Product of random elementary matrices: unimodular with a known inverse.
  auto unimodular(std::size_t n, int steps, IntMatrix& inverse) -> IntMatrix {
    IntMatrix m = IntMatrix::identity(n);
    inverse = IntMatrix::identity(n);
    if (n < 2) return m;
    for (int s = 0; s < steps; ++s) {
      const auto i = index(n);
      auto j = index(n - 1);
      if (j >= i) ++j;
      const long c = integer(-2, 2);
      IntMatrix e = IntMatrix::identity(n);
      IntMatrix einv = IntMatrix::identity(n);
      e(i, j) = c;
      einv(i, j) = -c;
      m = e * m;
      inverse = inverse * einv;
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

using Rational = mpq_class;
using RatMatrix = std::vector<std::vector<Rational>>;

inline auto to_rational(const IntMatrix& m) -> RatMatrix {
  RatMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rational(m(i, j));
  }
  return r;
}

// Rank over Q by fraction-field elimination; independent of the integer normal forms.
inline auto rational_rank(const IntMatrix& m) -> std::size_t {
  auto a = to_rational(m);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[i][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline auto rational_determinant(const IntMatrix& m) -> Rational {
  auto a = to_rational(m);
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

// Rational coefficients c with c·rows = v for independent rows, or nullopt when v is outside their Q-span.
inline auto rational_solve(const IntMatrix& rows, const IntVector& v) -> std::optional<std::vector<Rational>> {
  const std::size_t k = rows.rows();
  const std::size_t n = rows.cols();
  // Columns of the augmented system are the rows of `rows` followed by v.
  RatMatrix a(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(rows(j, i));
    a[i][k] = Rational(v[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t t = c; t <= k; ++t) a[i][t] -= f * a[r][t];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (a[i][k] != 0) return std::nullopt;
  }
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t i = 0; i < r; ++i) c[pivot_col[i]] = a[i][k] / a[i][pivot_col[i]];
  return c;
}

inline auto is_integral(const std::vector<Rational>& c) -> bool {
  for (const auto& x : c) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

}  // namespace tw::test
