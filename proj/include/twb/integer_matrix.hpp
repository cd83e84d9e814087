#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "twb/bigint.hpp"

namespace twb {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  explicit IntegerMatrix(const std::vector<std::vector<BigInt>>& rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }
  /// diag(a, b) with a and b square.
  static IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b);
  /// [a | b]
  static IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<BigInt>> to_rows() const;
  std::vector<BigInt> column(std::size_t c) const;
  IntegerMatrix transpose() const;
  /// Rows and columns in [r0, r0+nr) x [c0, c0+nc).
  IntegerMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend std::vector<BigInt> operator*(const IntegerMatrix& a, const std::vector<BigInt>& v);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free elimination).
BigInt determinant(const IntegerMatrix& a);

/// a^n for square a, n >= 0.
IntegerMatrix matrix_power(const IntegerMatrix& a, std::size_t n);

/// Inverse of a matrix with determinant +-1; nullopt otherwise.
std::optional<IntegerMatrix> unimodular_inverse(const IntegerMatrix& a);

}  // namespace twb
