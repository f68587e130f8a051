#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"

namespace lusztig {

using Vec = std::vector<std::uint32_t>;

/**
 * @brief Dense matrix over F_p with entries stored as reduced residues.
 *
 * Row-major. All arithmetic is exact; the modulus travels with the matrix so
 * that mixed-modulus products are caught.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1 % p;
    return m;
  }

  /// Reduces every entry mod p; rows must all have equal length.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t p() const noexcept { return p_; }
  bool square() const noexcept { return rows_ == cols_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, std::int64_t value) noexcept {
    std::int64_t r = value % std::int64_t{p_};
    if (r < 0) r += p_;
    a_[i * cols_ + j] = static_cast<std::uint32_t>(r);
  }

  std::span<const std::uint32_t> data() const noexcept { return a_; }

  bool is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_ || x.p_ != y.p_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix z(x.rows_, y.cols_, x.p_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < y.cols_; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < x.cols_; ++k) acc += std::uint64_t{x(i, k)} * y(k, j) % x.p_;
        z(i, j) = static_cast<std::uint32_t>(acc % x.p_);
      }
    return z;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] = static_cast<std::uint32_t>((std::uint64_t{z.a_[k]} + y.a_[k]) % x.p_);
    return z;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k)
      z.a_[k] = static_cast<std::uint32_t>((std::uint64_t{z.a_[k]} + x.p_ - y.a_[k]) % x.p_);
    return z;
  }

  Matrix operator-() const {
    Matrix z = *this;
    for (auto& v : z.a_) v = v == 0 ? 0 : p_ - v;
    return z;
  }

  Matrix scaled(std::uint32_t c) const {
    Matrix z = *this;
    for (auto& v : z.a_) v = static_cast<std::uint32_t>(std::uint64_t{v} * c % p_);
    return z;
  }

  Matrix pow(unsigned e) const {
    Matrix result = identity(rows_, p_);
    Matrix base = *this;
    while (e != 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e != 0) base = base * base;
    }
    return result;
  }

  Vec apply(std::span<const std::uint32_t> v) const {
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += std::uint64_t{(*this)(i, k)} * v[k] % p_;
      out[i] = static_cast<std::uint32_t>(acc % p_);
    }
    return out;
  }

  std::uint32_t trace() const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
    return static_cast<std::uint32_t>(acc % p_);
  }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  void check_same_shape(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_ || p_ != y.p_) fail(ErrorKind::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> a_;
};

namespace linalg {

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  const FieldSpec field(m.p());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const std::uint64_t inv = field.inv(FFElem{m(row, col)}).value;
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = static_cast<std::uint32_t>(m(row, j) * inv % m.p());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const std::uint64_t factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + std::uint64_t{m.p() - m(row, j)} * factor) % m.p());
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

/// Basis of the right kernel {v : m v = 0}.
inline std::vector<Vec> nullspace(Matrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m(r, free) == 0 ? 0 : m.p() - m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of the span of a list of vectors of common length.
inline std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t length, std::uint32_t p) {
  if (vectors.empty()) return 0;
  Matrix m(vectors.size(), length, p);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
  return rank(std::move(m));
}

/// Greedily picks candidates that extend span(base); returns the chosen vectors.
inline std::vector<Vec> extend_basis(const std::vector<Vec>& base, const std::vector<Vec>& candidates, std::size_t length,
                                     std::uint32_t p) {
  std::vector<Vec> current = base;
  std::size_t current_rank = span_rank(current, length, p);
  std::vector<Vec> chosen;
  for (const auto& c : candidates) {
    current.push_back(c);
    const std::size_t r = span_rank(current, length, p);
    if (r > current_rank) {
      current_rank = r;
      chosen.push_back(c);
    } else {
      current.pop_back();
    }
  }
  return chosen;
}

inline std::uint32_t determinant(Matrix m) {
  if (!m.square()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const FieldSpec field(m.p());
  const std::size_t n = m.rows();
  FFElem det{1 % m.p()};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = field.neg(det);
    }
    det = field.mul(det, FFElem{m(col, col)});
    const FFElem inv = field.inv(FFElem{m(col, col)});
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const FFElem factor = field.mul(FFElem{m(i, col)}, inv);
      for (std::size_t j = col; j < n; ++j)
        m(i, j) = field.sub(FFElem{m(i, j)}, field.mul(factor, FFElem{m(col, j)})).value;
    }
  }
  return det.value;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.square()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.p());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1 % m.p();
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorKind::DivisionByZero, "matrix is singular");
  Matrix inv(n, n, m.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace linalg
}  // namespace lusztig
