#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "gmsr/field.hpp"

namespace gmsr {

/// Dense row-major matrix over GF(q). Zero-sized dimensions are allowed and
/// behave as empty blocks.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  Matrix(const Field& field, std::initializer_list<std::initializer_list<std::uint64_t>> rows);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix column(const Field& field, std::span<const Symbol> values);
  static Matrix row(const Field& field, std::span<const Symbol> values);
  /// Rows [1, x, x^2, ..., x^(cols-1)] for each x in points.
  static Matrix vandermonde(const Field& field, std::span<const Symbol> points,
                            std::size_t cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Symbol> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Symbol> data() const noexcept { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);
  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix scaled(Symbol s) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  void check_same_shape(const Matrix& other) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Solves a * x = b by Gauss-Jordan elimination, taking the first nonzero
/// entry in each column as pivot. Throws SingularMatrix or DimensionMismatch.
Matrix mat_solve(const Matrix& a, const Matrix& b);

Matrix mat_inv(const Matrix& a);

/// Dot product of two equal-length symbol vectors.
Symbol dot(const Field& field, std::span<const Symbol> a, std::span<const Symbol> b);

}  // namespace gmsr
