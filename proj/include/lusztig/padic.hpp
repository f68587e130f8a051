#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "triangular.hpp"

namespace lusztig {

/// Node deleted from the extended C_n Dynkin diagram (nodes 0..n).
struct VertexDescriptor {
  int n = 0;
  int index = 0;

  bool hyperspecial() const noexcept { return index == 0 || index == n; }
  friend bool operator==(const VertexDescriptor&, const VertexDescriptor&) = default;
};

/// Sizes (2i, 2(n-i)) of the reductive quotient sp_2i x sp_2(n-i); hyperspecial nodes give (2n, 0).
inline std::pair<int, int> reductive_quotient(const VertexDescriptor& v) {
  if (v.n < 1 || v.index < 0 || v.index > v.n)
    fail(ErrorKind::IndexOutOfRange, "vertex index must lie in [0, n]");
  if (v.hyperspecial()) return {2 * v.n, 0};
  return {2 * v.index, 2 * (v.n - v.index)};
}

/// Symbolic p-adic Lusztig function: a vertex plus the ranks of the Lusztig data on its quotient.
struct PadicLusztigDescriptor {
  VertexDescriptor vertex;
  int delta1 = 0;
  int delta2 = 0;

  friend bool operator==(const PadicLusztigDescriptor&, const PadicLusztigDescriptor&) = default;
};

/**
 * Case analysis on n: two hyperspecial descriptors when n is triangular, two
 * descriptors (indices delta1 and delta2) for each n = delta1 + delta2 with
 * distinct positive triangular summands, one descriptor at index n/2 when
 * n = 2 delta. Ordered by vertex index.
 */
inline std::vector<PadicLusztigDescriptor> catalog_padic_lusztig(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "rank must be >= 1");
  std::vector<PadicLusztigDescriptor> out;
  if (is_triangular(n)) {
    out.push_back({{n, 0}, n, 0});
    out.push_back({{n, n}, n, 0});
  }
  for (int k = 1; triangular(k) < n; ++k) {
    const int d1 = static_cast<int>(triangular(k));
    const int d2 = n - d1;
    if (d2 <= d1 || !is_triangular(d2)) continue;
    out.push_back({{n, d1}, d1, d2});
    out.push_back({{n, d2}, d2, d1});
  }
  if (n % 2 == 0 && is_triangular(n / 2)) out.push_back({{n, n / 2}, n / 2, n / 2});
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.vertex.index < b.vertex.index; });
  return out;
}

/// Ordered index pairs (a, b), a, b >= 0, with T_a + T_b = n, by brute force.
inline std::vector<std::pair<int, int>> triangular_reps(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; triangular(a) <= n; ++a)
    for (int b = 0; triangular(a) + triangular(b) <= n; ++b)
      if (triangular(a) + triangular(b) == n) out.emplace_back(a, b);
  return out;
}

struct DivisorCensus {
  int d1 = 0;
  int d3 = 0;
};

/// Divisors of 8n+2 congruent to 1 and to 3 mod 4.
inline DivisorCensus divisor_census(int n) {
  const std::int64_t m = 8 * std::int64_t{n} + 2;
  DivisorCensus out;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    if (d % 4 == 1) ++out.d1;
    if (d % 4 == 3) ++out.d3;
  }
  return out;
}

/// Ordered pairs of positive odd (x, y) with x^2 + y^2 = 8n+2.
inline int odd_square_reps(int n) {
  const std::int64_t m = 8 * std::int64_t{n} + 2;
  int count = 0;
  for (std::int64_t x = 1; x * x < m; x += 2)
    for (std::int64_t y = 1; x * x + y * y <= m; y += 2)
      if (x * x + y * y == m) ++count;
  return count;
}

/// Piecewise dimension formula 2(d1 - d3) (+2 at triangular n), kept only for comparison.
inline int theorem_formula_dim(int n) {
  const auto [d1, d3] = divisor_census(n);
  return is_triangular(n) ? 2 * (d1 - d3 + 1) : 2 * (d1 - d3);
}

/// 1 iff n = 2 delta with delta triangular.
inline int stable_subspace_dim(int n) { return n % 2 == 0 && is_triangular(n / 2) ? 1 : 0; }

struct CensusRow {
  int n = 0;
  int enum_count = 0;
  int grosswald_count = 0;
  int d1 = 0;
  int d3 = 0;
  int odd_square_count = 0;
  int theorem_formula_value = 0;
  int stable_dim = 0;

  bool counts_agree() const noexcept {
    return enum_count == grosswald_count && grosswald_count == d1 - d3 && d1 - d3 == odd_square_count;
  }
  /// The piecewise formula disagrees with the enumeration.
  bool mismatch() const noexcept { return theorem_formula_value != enum_count; }
};

inline constexpr int kDefaultCensusMax = 500;

inline std::vector<CensusRow> census(int n_max) {
  if (n_max < 1) fail(ErrorKind::InvalidArgument, "n_max must be >= 1");
  std::vector<CensusRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto [d1, d3] = divisor_census(n);
    rows.push_back({n, static_cast<int>(catalog_padic_lusztig(n).size()), static_cast<int>(triangular_reps(n).size()), d1,
                    d3, odd_square_reps(n), theorem_formula_dim(n), stable_subspace_dim(n)});
  }
  return rows;
}

/// Fourth root of unity i^k, k in 0..3.
struct FourthRoot {
  int k = 0;

  Complex value() const noexcept {
    static constexpr double re[] = {1, 0, -1, 0};
    static constexpr double im[] = {0, 1, 0, -1};
    return {re[k], im[k]};
  }
  std::string name() const {
    static constexpr const char* names[] = {"1", "i", "-1", "-i"};
    return names[k];
  }
  friend bool operator==(FourthRoot, FourthRoot) = default;
};

/// tau-class^n with tau-class 1 for p = 1 mod 4 and -i for p = 3 mod 4.
inline FourthRoot eigenvalue_symbolic(int n, int p_mod_4) {
  if (p_mod_4 != 1 && p_mod_4 != 3) fail(ErrorKind::InvalidArgument, "p mod 4 must be 1 or 3");
  if (p_mod_4 == 1) return {0};
  return {static_cast<int>((3 * static_cast<std::int64_t>(n)) % 4)};
}

struct LusztigDistribution {
  PadicLusztigDescriptor descriptor;
  FourthRoot eigenvalue;
  bool stable = false;
};

/// Symbolic basis of the Fourier eigenspace: one record per catalog descriptor.
inline std::vector<LusztigDistribution> lusztig_distributions(int n, int p_mod_4) {
  const FourthRoot gamma = eigenvalue_symbolic(n, p_mod_4);
  std::vector<LusztigDistribution> out;
  for (const auto& d : catalog_padic_lusztig(n)) out.push_back({d, gamma, d.delta1 == d.delta2});
  return out;
}

}  // namespace lusztig
