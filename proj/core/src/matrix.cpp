#include "tw/matrix.hpp"

#include "tw/errors.hpp"

namespace tw {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, IntVector(cols)) {}

auto IntMatrix::identity(std::size_t n) -> IntMatrix {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

auto IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) -> IntMatrix {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

auto IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) -> IntMatrix {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

auto IntMatrix::column(std::size_t j) const -> IntVector {
  IntVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = data_[i][j];
  return c;
}

void IntMatrix::append_row(IntVector r) {
  if (r.size() != cols_) throw DimensionError("row length " + std::to_string(r.size()) + " != " + std::to_string(cols_));
  data_.push_back(std::move(r));
}

void IntMatrix::resize_rows(std::size_t n) { data_.resize(n, IntVector(cols_)); }

auto IntMatrix::transpose() const -> IntMatrix {
  IntMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
  }
  return t;
}

auto IntMatrix::apply(const IntVector& v) const -> IntVector {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  IntVector r(rows());
  for (std::size_t i = 0; i < rows(); ++i) r[i] = dot(data_[i], v);
  return r;
}

auto IntMatrix::left_apply(const IntVector& v) const -> IntVector {
  if (v.size() != rows()) throw DimensionError("vector-matrix shape mismatch");
  IntVector r(cols_);
  for (std::size_t i = 0; i < rows(); ++i) addmul(r, v[i], data_[i]);
  return r;
}

auto IntMatrix::is_zero() const -> bool {
  for (const auto& r : data_) {
    if (!tw::is_zero(r)) return false;
  }
  return true;
}

auto IntMatrix::to_string() const -> std::string {
  std::string s = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i > 0) s += ",";
    s += tw::to_string(data_[i]);
  }
  return s + "]";
}

auto operator*(const IntMatrix& a, const IntMatrix& b) -> IntMatrix {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) addmul(c.row(i), a(i, k), b.row(k));
  }
  return c;
}

auto operator+(const IntMatrix& a, const IntMatrix& b) -> IntMatrix {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) c.row(i) = add(a.row(i), b.row(i));
  return c;
}

auto operator-(const IntMatrix& a, const IntMatrix& b) -> IntMatrix {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) c.row(i) = sub(a.row(i), b.row(i));
  return c;
}

auto operator*(const Integer& c, const IntMatrix& a) -> IntMatrix {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r.row(i) = scale(c, a.row(i));
  return r;
}

auto stack(const IntMatrix& top, const IntMatrix& bottom) -> IntMatrix {
  if (top.cols() != bottom.cols()) throw DimensionError("stack column mismatch");
  IntMatrix m = top;
  for (const auto& r : bottom.row_vectors()) m.append_row(r);
  return m;
}

}  // namespace tw
