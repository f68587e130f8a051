#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "matrix.hpp"

namespace lusztig {

/**
 * @brief A partition of 2n, parts non-increasing.
 *
 * Admissibility (odd parts occur with even multiplicity) is a predicate, not
 * a construction invariant, since Jordan types of arbitrary nilpotent
 * matrices are partitions too.
 */
class SymplecticPartition {
 public:
  SymplecticPartition() = default;

  explicit SymplecticPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) fail(ErrorKind::InvalidArgument, "partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) fail(ErrorKind::InvalidArgument, "partition parts must be non-increasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int rank() const noexcept { return total() / 2; }

  int multiplicity(int part) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  bool admissible() const noexcept {
    if (total() % 2 != 0) return false;
    for (int part : parts_)
      if (part % 2 == 1 && multiplicity(part) % 2 != 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const SymplecticPartition&, const SymplecticPartition&) = default;
  friend auto operator<=>(const SymplecticPartition&, const SymplecticPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// J = [[0, I_n], [-I_n, 0]].
inline Matrix symplectic_form(std::size_t n, std::uint32_t p) {
  Matrix j(2 * n, 2 * n, p);
  for (std::size_t i = 0; i < n; ++i) {
    j.set(i, n + i, 1);
    j.set(n + i, i, -1);
  }
  return j;
}

/// omega(x, y) = x^t J y.
inline std::uint32_t symplectic_pairing(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                                        std::uint32_t p) {
  const std::size_t n = x.size() / 2;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::uint64_t{x[i]} * y[n + i] % p;
    acc += std::uint64_t{p - x[n + i] % p} * y[i] % p;
  }
  return static_cast<std::uint32_t>(acc % p);
}

inline void require_even_square(const Matrix& x) {
  if (!x.square() || x.rows() % 2 != 0)
    fail(ErrorKind::DimensionMismatch, "expected a square matrix of even size");
}

/// X^t J + J X = 0.
inline bool is_symplectic_lie(const Matrix& x) {
  require_even_square(x);
  const Matrix j = symplectic_form(x.rows() / 2, x.p());
  return (x.transpose() * j + j * x).is_zero();
}

/// g^t J g = J.
inline bool is_symplectic_group(const Matrix& g) {
  require_even_square(g);
  const Matrix j = symplectic_form(g.rows() / 2, g.p());
  return g.transpose() * j * g == j;
}

/// g^{-1} = J^{-1} g^t J for symplectic g.
inline Matrix symplectic_inverse(const Matrix& g) {
  const Matrix j = symplectic_form(g.rows() / 2, g.p());
  return -(j * g.transpose() * j);
}

inline Matrix conjugate(const Matrix& g, const Matrix& x, const Matrix& g_inverse) { return g * x * g_inverse; }

/// tr(XY), the invariant form used throughout (proportional to the Killing form).
inline FFElem trace_form(const Matrix& x, const Matrix& y) {
  if (!x.square() || x.rows() != y.rows() || x.cols() != y.cols() || x.p() != y.p())
    fail(ErrorKind::DimensionMismatch, "trace form needs matrices of equal size");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) acc += std::uint64_t{x(i, k)} * y(k, i) % x.p();
  return FFElem{static_cast<std::uint32_t>(acc % x.p())};
}

inline bool is_nilpotent(const Matrix& x) {
  if (!x.square()) fail(ErrorKind::DimensionMismatch, "nilpotency needs a square matrix");
  // X^N = 0 with N = size; square repeatedly up to the next power of two >= N.
  Matrix power = x;
  std::size_t e = 1;
  while (e < x.rows()) {
    power = power * power;
    e *= 2;
  }
  return power.is_zero();
}

/// Jordan type from the rank sequence r_k = rank(X^k): #parts >= k equals r_{k-1} - r_k.
inline SymplecticPartition jordan_partition(const Matrix& x) {
  if (!is_nilpotent(x)) fail(ErrorKind::NotNilpotent, "matrix is not nilpotent");
  const std::size_t size = x.rows();
  std::vector<std::size_t> ranks{size};
  Matrix power = Matrix::identity(size, x.p());
  while (ranks.back() != 0) {
    power = power * x;
    ranks.push_back(linalg::rank(power));
  }
  std::vector<int> parts;
  // at_least[k] = r_{k-1} - r_k for k >= 1
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least - at_least_next; ++c) parts.push_back(static_cast<int>(k));
  }
  return SymplecticPartition(std::move(parts));
}

/// Symplectic transvection x -> x + a omega(x, v) v.
inline Matrix transvection(std::span<const std::uint32_t> v, std::uint32_t a, std::uint32_t p) {
  const std::size_t size = v.size();
  const Matrix j = symplectic_form(size / 2, p);
  Matrix t = Matrix::identity(size, p);
  // omega(x, v) = sum_k x_k (J v)_k
  const Vec jv = j.apply(v);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      t(r, c) = static_cast<std::uint32_t>((t(r, c) + std::uint64_t{a} * v[r] % p * jv[c]) % p);
  return t;
}

/// Transvections along e_i, f_i, e_i + e_j and e_i + f_j; they generate Sp_2n(F_p).
inline std::vector<Matrix> sp_generators(std::size_t n, const FieldSpec& field) {
  const std::uint32_t p = field.p();
  std::vector<Vec> directions;
  auto unit = [&](std::size_t k) {
    Vec v(2 * n, 0);
    v[k] = 1;
    return v;
  };
  for (std::size_t i = 0; i < 2 * n; ++i) directions.push_back(unit(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i < j) {
        Vec v = unit(i);
        v[j] = 1;
        directions.push_back(v);
      }
      Vec w = unit(i);
      w[n + j] = 1;
      directions.push_back(w);
    }
  std::vector<Matrix> gens;
  for (const auto& v : directions) gens.push_back(transvection(v, 1, p));
  return gens;
}

/// Base-p code of a matrix; throws TooLarge when the code does not fit 64 bits.
inline std::uint64_t matrix_code(const Matrix& m) {
  std::uint64_t code = 0;
  const std::uint64_t limit = ~std::uint64_t{0} / m.p();
  for (auto v : m.data()) {
    if (code > limit) fail(ErrorKind::TooLarge, "matrix code overflows 64 bits");
    code = code * m.p() + v;
  }
  return code;
}

/// Breadth-first closure of the group generated by gens; throws TooLarge past cap elements.
inline std::vector<Matrix> group_closure(const std::vector<Matrix>& gens, std::size_t cap = 2'000'000) {
  if (gens.empty()) return {};
  const Matrix id = Matrix::identity(gens.front().rows(), gens.front().p());
  std::unordered_set<std::uint64_t> seen{matrix_code(id)};
  std::vector<Matrix> elements{id};
  std::deque<Matrix> queue{id};
  while (!queue.empty()) {
    const Matrix g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Matrix h = g * s;
      if (seen.insert(matrix_code(h)).second) {
        if (elements.size() >= cap) fail(ErrorKind::TooLarge, "group closure exceeds element cap");
        elements.push_back(h);
        queue.push_back(std::move(h));
      }
    }
  }
  return elements;
}

}  // namespace lusztig
