#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "liealg.hpp"
#include "matrix.hpp"

namespace lusztig {

/// Largest point count any routine will enumerate.
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

/**
 * @brief Coordinates on sp_2a(F_p) x sp_2b(F_p) x ... .
 *
 * Each factor sp_2n has coordinates (A row-major, upper triangle of B, upper
 * triangle of C) for X = [[A, B], [C, -A^t]], so dim sp_2n = n(2n+1). A point
 * is addressed by a 64-bit index: its coordinate vector read as base-p digits,
 * most significant first.
 */
class SpAlgebra {
 public:
  SpAlgebra(std::vector<int> ranks, const FieldSpec& field) : ranks_(std::move(ranks)), field_(field) {
    if (ranks_.empty()) fail(ErrorKind::InvalidArgument, "algebra needs at least one factor");
    for (int n : ranks_) {
      if (n < 1) fail(ErrorKind::InvalidArgument, "factor rank must be >= 1");
      offsets_.push_back(dim_);
      dim_ += factor_dim(n);
    }
    const std::uint64_t limit = ~std::uint64_t{0} / field.p();
    cardinality_ = 1;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (cardinality_ > limit) fail(ErrorKind::TooLarge, "algebra too large to index");
      cardinality_ *= field.p();
    }
    build_basis();
  }

  static std::size_t factor_dim(int n) noexcept { return static_cast<std::size_t>(n) * (2 * static_cast<std::size_t>(n) + 1); }

  const std::vector<int>& ranks() const noexcept { return ranks_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t cardinality() const noexcept { return cardinality_; }
  int total_rank() const noexcept { return std::accumulate(ranks_.begin(), ranks_.end(), 0); }
  bool is_product() const noexcept { return ranks_.size() > 1; }

  bool enumerable() const noexcept { return cardinality_ <= kEnumerationCap; }
  void require_enumerable() const {
    if (!enumerable())
      fail(ErrorKind::TooLarge, "algebra has " + std::to_string(cardinality_) + " points; cap is " +
                                    std::to_string(kEnumerationCap));
  }

  Vec coords(std::uint64_t index) const {
    Vec c(dim_);
    for (std::size_t k = dim_; k-- > 0;) {
      c[k] = static_cast<std::uint32_t>(index % p());
      index /= p();
    }
    return c;
  }

  std::uint64_t index(std::span<const std::uint32_t> c) const noexcept {
    std::uint64_t idx = 0;
    for (auto v : c) idx = idx * p() + v;
    return idx;
  }

  /// Matrices of each factor at the given point.
  std::vector<Matrix> point(std::uint64_t index) const { return matrices(coords(index)); }

  std::vector<Matrix> matrices(std::span<const std::uint32_t> c) const {
    std::vector<Matrix> out;
    for (std::size_t f = 0; f < ranks_.size(); ++f) {
      const auto n = static_cast<std::size_t>(ranks_[f]);
      Matrix x(2 * n, 2 * n, p());
      for (std::size_t k = 0; k < factor_dim(ranks_[f]); ++k) {
        const std::uint32_t a = c[offsets_[f] + k];
        if (a != 0) x = x + basis_[f][k].scaled(a);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  /// Single-factor convenience.
  Matrix matrix(std::uint64_t index) const { return point(index).front(); }

  /// Inverse of matrices(); throws NotInAlgebra if some factor is not in sp.
  Vec coords_of(std::span<const Matrix> xs) const {
    if (xs.size() != ranks_.size()) fail(ErrorKind::DimensionMismatch, "wrong number of factors");
    Vec c(dim_, 0);
    for (std::size_t f = 0; f < ranks_.size(); ++f) {
      const auto n = static_cast<std::size_t>(ranks_[f]);
      const Matrix& x = xs[f];
      if (x.rows() != 2 * n || x.cols() != 2 * n || x.p() != p())
        fail(ErrorKind::DimensionMismatch, "factor has the wrong size or modulus");
      if (!is_symplectic_lie(x)) fail(ErrorKind::NotInAlgebra, "matrix is not in sp_" + std::to_string(2 * n));
      std::size_t k = offsets_[f];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[k++] = x(i, j);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c[k++] = x(i, n + j);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c[k++] = x(n + i, j);
    }
    return c;
  }

  std::uint64_t index_of(std::span<const Matrix> xs) const { return index(coords_of(xs)); }
  std::uint64_t index_of(const Matrix& x) const { return index_of(std::span<const Matrix>(&x, 1)); }

  /// Gram matrix of the summed trace forms in coordinates.
  const Matrix& gram() const noexcept { return gram_; }

  /// Sum over factors of tr(X_f Y_f), evaluated through the Gram matrix.
  std::uint32_t pairing(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (x[k] == 0) continue;
      std::uint64_t row = 0;
      for (std::size_t l = 0; l < dim_; ++l) row += std::uint64_t{gram_(k, l)} * y[l];
      acc += x[k] * (row % p());
    }
    return static_cast<std::uint32_t>(acc % p());
  }

  std::string name() const {
    std::string s;
    for (std::size_t f = 0; f < ranks_.size(); ++f) {
      if (f > 0) s += " x ";
      s += "sp_" + std::to_string(2 * ranks_[f]);
    }
    return s + "(F_" + std::to_string(p()) + ")";
  }

 private:
  void build_basis() {
    for (int rank : ranks_) {
      const auto n = static_cast<std::size_t>(rank);
      std::vector<Matrix> basis;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Matrix e(2 * n, 2 * n, p());
          e.set(i, j, 1);
          e.set(n + j, n + i, -1);
          basis.push_back(std::move(e));
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Matrix e(2 * n, 2 * n, p());
          e.set(i, n + j, 1);
          e.set(j, n + i, 1);
          basis.push_back(std::move(e));
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Matrix e(2 * n, 2 * n, p());
          e.set(n + i, j, 1);
          e.set(n + j, i, 1);
          basis.push_back(std::move(e));
        }
      basis_.push_back(std::move(basis));
    }
    gram_ = Matrix(dim_, dim_, p());
    for (std::size_t f = 0; f < ranks_.size(); ++f)
      for (std::size_t k = 0; k < basis_[f].size(); ++k)
        for (std::size_t l = 0; l < basis_[f].size(); ++l)
          gram_(offsets_[f] + k, offsets_[f] + l) = trace_form(basis_[f][k], basis_[f][l]).value;
  }

  std::vector<int> ranks_;
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> offsets_;
  std::uint64_t cardinality_ = 1;
  std::vector<std::vector<Matrix>> basis_;
  Matrix gram_;
};

}  // namespace lusztig
