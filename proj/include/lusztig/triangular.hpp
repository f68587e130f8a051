#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "error.hpp"
#include "liealg.hpp"

namespace lusztig {

constexpr std::int64_t triangular(std::int64_t k) noexcept { return k * (k + 1) / 2; }

/// i with i(i+1)/2 = n, if any.
inline std::optional<int> triangular_index(std::int64_t n) {
  if (n < 0) return std::nullopt;
  std::int64_t i = 0;
  while (triangular(i) < n) ++i;
  if (triangular(i) == n) return static_cast<int>(i);
  return std::nullopt;
}

inline bool is_triangular(std::int64_t n) { return triangular_index(n).has_value(); }

/// (2i, 2i-2, ..., 4, 2) for n = i(i+1)/2.
inline SymplecticPartition lusztig_partition(int n) {
  const auto i = triangular_index(n);
  if (!i || *i < 1) fail(ErrorKind::NotTriangular, std::to_string(n) + " is not a positive triangular number");
  std::vector<int> parts;
  for (int k = *i; k >= 1; --k) parts.push_back(2 * k);
  return SymplecticPartition(std::move(parts));
}

/// Multiset union of the Lusztig partitions of delta1 >= delta2 >= 0.
inline SymplecticPartition extended_lusztig_partition(int delta1, int delta2) {
  if (delta1 < delta2) std::swap(delta1, delta2);
  const auto i = triangular_index(delta1);
  const auto j = triangular_index(delta2);
  if (!i || !j || *i < 1) fail(ErrorKind::NotTriangular, "both summands must be triangular, the larger one positive");
  std::vector<int> parts;
  for (int k = *i; k >= 1; --k) parts.push_back(2 * k);
  for (int k = *j; k >= 1; --k) parts.push_back(2 * k);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return SymplecticPartition(std::move(parts));
}

inline bool is_lusztig_partition(const SymplecticPartition& lambda) {
  const auto i = triangular_index(lambda.rank());
  return i && *i >= 1 && lambda.total() % 2 == 0 && lusztig_partition(lambda.rank()) == lambda;
}

/// True for a union of two Lusztig partitions (one possibly empty).
inline bool is_extended_lusztig_partition(const SymplecticPartition& lambda) {
  if (lambda.parts().empty() || lambda.total() % 2 != 0) return false;
  const int n = lambda.rank();
  for (int d2 = 0; 2 * d2 <= n; ++d2) {
    if (!is_triangular(d2) || !is_triangular(n - d2)) continue;
    if (extended_lusztig_partition(n - d2, d2) == lambda) return true;
  }
  return false;
}

}  // namespace lusztig
