#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tw/integer.hpp"

namespace tw {

// Dense integer matrix stored as a sequence of rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static auto identity(std::size_t n) -> IntMatrix;
  // Every row must have length `cols`.
  static auto from_rows(const std::vector<IntVector>& rows, std::size_t cols) -> IntMatrix;
  static auto from_columns(const std::vector<IntVector>& columns, std::size_t rows) -> IntMatrix;

  [[nodiscard]] auto rows() const -> std::size_t { return data_.size(); }
  [[nodiscard]] auto cols() const -> std::size_t { return cols_; }

  auto operator()(std::size_t i, std::size_t j) -> Integer& { return data_[i][j]; }
  auto operator()(std::size_t i, std::size_t j) const -> const Integer& { return data_[i][j]; }
  auto row(std::size_t i) -> IntVector& { return data_[i]; }
  [[nodiscard]] auto row(std::size_t i) const -> const IntVector& { return data_[i]; }
  [[nodiscard]] auto row_vectors() const -> const std::vector<IntVector>& { return data_; }
  [[nodiscard]] auto column(std::size_t j) const -> IntVector;

  void swap_rows(std::size_t i, std::size_t j) { data_[i].swap(data_[j]); }
  void append_row(IntVector r);
  void resize_rows(std::size_t n);

  [[nodiscard]] auto transpose() const -> IntMatrix;
  // M·v for a column vector v.
  [[nodiscard]] auto apply(const IntVector& v) const -> IntVector;
  // v·M for a row vector v.
  [[nodiscard]] auto left_apply(const IntVector& v) const -> IntVector;
  [[nodiscard]] auto is_zero() const -> bool;
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator==(const IntMatrix& a, const IntMatrix& b) -> bool = default;

 private:
  std::size_t cols_ = 0;
  std::vector<IntVector> data_;
};

auto operator*(const IntMatrix& a, const IntMatrix& b) -> IntMatrix;
auto operator+(const IntMatrix& a, const IntMatrix& b) -> IntMatrix;
auto operator-(const IntMatrix& a, const IntMatrix& b) -> IntMatrix;
auto operator*(const Integer& c, const IntMatrix& a) -> IntMatrix;

// Vertical concatenation; column counts must agree.
[[nodiscard]] auto stack(const IntMatrix& top, const IntMatrix& bottom) -> IntMatrix;

}  // namespace tw
