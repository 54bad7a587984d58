#include "tw/exterior.hpp"

#include <limits>

#include "tw/errors.hpp"
#include "tw/normal_form.hpp"

namespace tw {
namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

}  // namespace

ExteriorBasis::ExteriorBasis(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
  if (degree != 2 && degree != 3) throw PreconditionError("exterior degree must be 2 or 3");
  if (degree == 2) {
    lookup_.assign(n * n, npos);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        lookup_[i * n + j] = tuples_.size();
        tuples_.push_back({i, j, 0});
      }
    }
  } else {
    lookup_.assign(n * n * n, npos);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          lookup_[(i * n + j) * n + k] = tuples_.size();
          tuples_.push_back({i, j, k});
        }
      }
    }
  }
}

auto ExteriorBasis::index(std::size_t i, std::size_t j) const -> std::size_t {
  if (degree_ != 2 || !(i < j && j < n_)) throw PreconditionError("not an increasing pair");
  return lookup_[i * n_ + j];
}

auto ExteriorBasis::index(std::size_t i, std::size_t j, std::size_t k) const -> std::size_t {
  if (degree_ != 3 || !(i < j && j < k && k < n_)) throw PreconditionError("not an increasing triple");
  return lookup_[(i * n_ + j) * n_ + k];
}

auto wedge2(const IntVector& x, const IntVector& y) -> IntVector {
  if (x.size() != y.size()) throw DimensionError("wedge2: length mismatch");
  const std::size_t n = x.size();
  IntVector out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(x[i] * y[j] - x[j] * y[i]);
  }
  return out;
}

auto wedge3(const IntVector& x, const IntVector& y, const IntVector& z) -> IntVector {
  if (x.size() != y.size() || x.size() != z.size()) throw DimensionError("wedge3: length mismatch");
  const std::size_t n = x.size();
  IntVector out;
  out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer m_ij = x[i] * y[j] - x[j] * y[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        // Cofactor expansion along z.
        const Integer m_ik = x[i] * y[k] - x[k] * y[i];
        const Integer m_jk = x[j] * y[k] - x[k] * y[j];
        out.push_back(m_jk * z[i] - m_ik * z[j] + m_ij * z[k]);
      }
    }
  }
  return out;
}

auto wedge2_1(const IntVector& w, std::size_t n, const IntVector& z) -> IntVector {
  const ExteriorBasis b2(n, 2);
  if (w.size() != b2.size() || z.size() != n) throw DimensionError("wedge2_1: length mismatch");
  const ExteriorBasis b3(n, 3);
  IntVector out(b3.size(), 0);
  for (std::size_t p = 0; p < b2.size(); ++p) {
    if (sgn(w[p]) == 0) continue;
    const auto [i, j, unused] = b2.tuple(p);
    (void)unused;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j || sgn(z[k]) == 0) continue;
      // Sort (i, j, k); one transposition per position k passes.
      const Integer c = w[p] * z[k];
      if (k > j) {
        out[b3.index(i, j, k)] += c;
      } else if (k > i) {
        out[b3.index(i, k, j)] -= c;
      } else {
        out[b3.index(k, i, j)] += c;
      }
    }
  }
  return out;
}

auto induce_wedge2(const IntMatrix& m) -> IntMatrix {
  if (m.rows() != m.cols()) throw DimensionError("induce_wedge2: square matrix required");
  if (abs(determinant(m)) != 1) throw PreconditionError("induce_wedge2: matrix is not invertible over Z");
  const std::size_t n = m.rows();
  const ExteriorBasis b(n, 2);
  std::vector<IntVector> cols;
  cols.reserve(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) {
    const auto& t = b.tuple(p);
    cols.push_back(wedge2(m.column(t[0]), m.column(t[1])));
  }
  return IntMatrix::from_columns(cols, b.size());
}

auto induce_wedge3(const IntMatrix& m) -> IntMatrix {
  if (m.rows() != m.cols()) throw DimensionError("induce_wedge3: square matrix required");
  if (abs(determinant(m)) != 1) throw PreconditionError("induce_wedge3: matrix is not invertible over Z");
  const std::size_t n = m.rows();
  const ExteriorBasis b(n, 3);
  std::vector<IntVector> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(m.column(i));
  std::vector<IntVector> cols;
  cols.reserve(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) {
    const auto& t = b.tuple(p);
    cols.push_back(wedge3(images[t[0]], images[t[1]], images[t[2]]));
  }
  return IntMatrix::from_columns(cols, b.size());
}

}  // namespace tw
