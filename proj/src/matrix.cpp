#include "gmsr/matrix.hpp"

#include <algorithm>
#include <string>

namespace gmsr {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(const Field& field,
               std::initializer_list<std::initializer_list<std::uint64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (auto v : r) data_.push_back(field_.reduce(v));
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Field& field, std::span<const Symbol> values) {
  Matrix m(field, values.size(), 1);
  std::copy(values.begin(), values.end(), m.data_.begin());
  return m;
}

Matrix Matrix::row(const Field& field, std::span<const Symbol> values) {
  Matrix m(field, 1, values.size());
  std::copy(values.begin(), values.end(), m.data_.begin());
  return m;
}

Matrix Matrix::vandermonde(const Field& field, std::span<const Symbol> points,
                           std::size_t cols) {
  Matrix m(field, points.size(), cols);
  for (std::size_t r = 0; r < points.size(); ++r) {
    Symbol p = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = p;
      p = field.mul(p, points[r]);
    }
  }
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
  if (r0 + h > rows_ || c0 + w > cols_) {
    throw DimensionMismatch("block exceeds " + shape(rows_, cols_));
  }
  Matrix out(field_, h, w);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw DimensionMismatch("block exceeds " + shape(rows_, cols_));
  }
  for (std::size_t r = 0; r < src.rows_; ++r) {
    for (std::size_t c = 0; c < src.cols_; ++c) (*this)(r0 + r, c0 + c) = src(r, c);
  }
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Symbol v) { return v == 0; });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

void Matrix::check_same_shape(const Matrix& other) const {
  if (!(field_ == other.field_)) throw ModulusMismatch("matrices over different fields");
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch(shape(rows_, cols_) + " vs " + shape(other.rows_, other.cols_));
  }
}

Matrix Matrix::operator+(const Matrix& other) const {
  check_same_shape(other);
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.add(data_[i], other.data_[i]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  check_same_shape(other);
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.sub(data_[i], other.data_[i]);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const { return mat_mul(*this, other); }

Matrix Matrix::scaled(Symbol s) const {
  Matrix out(*this);
  for (auto& v : out.data_) v = field_.mul(v, s);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
  }
  return os << ']';
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw ModulusMismatch("matrices over different fields");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + shape(a.rows(), a.cols()) + " by " +
                            shape(b.rows(), b.cols()));
  }
  const Field& f = a.field();
  const std::uint64_t q = f.modulus();
  Matrix out(f, a.rows(), b.cols());
  // product < 2^62 and acc < 2^31, so the sum fits in 64 bits.
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < a.cols(); ++i) {
        acc = (acc + static_cast<std::uint64_t>(a(r, i)) * b(i, c)) % q;
      }
      out(r, c) = static_cast<Symbol>(acc);
    }
  }
  return out;
}

Matrix mat_solve(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw ModulusMismatch("matrices over different fields");
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("coefficient matrix " + shape(a.rows(), a.cols()) +
                            " is not square");
  }
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("right-hand side has " + std::to_string(b.rows()) +
                            " rows, expected " + std::to_string(a.rows()));
  }
  const Field& f = a.field();
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  Matrix lhs(a);
  Matrix rhs(b);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && lhs(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("no pivot in column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lhs(pivot, c), lhs(col, c));
      for (std::size_t c = 0; c < m; ++c) std::swap(rhs(pivot, c), rhs(col, c));
    }
    const Symbol inv = f.inv(lhs(col, col));
    for (std::size_t c = 0; c < n; ++c) lhs(col, c) = f.mul(lhs(col, c), inv);
    for (std::size_t c = 0; c < m; ++c) rhs(col, c) = f.mul(rhs(col, c), inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Symbol factor = lhs(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        lhs(r, c) = f.sub(lhs(r, c), f.mul(factor, lhs(col, c)));
      }
      for (std::size_t c = 0; c < m; ++c) {
        rhs(r, c) = f.sub(rhs(r, c), f.mul(factor, rhs(col, c)));
      }
    }
  }
  return rhs;
}

Matrix mat_inv(const Matrix& a) {
  return mat_solve(a, Matrix::identity(a.field(), a.rows()));
}

Symbol dot(const Field& field, std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  const std::uint64_t q = field.modulus();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % q;
  }
  return static_cast<Symbol>(acc);
}

}  // namespace gmsr
