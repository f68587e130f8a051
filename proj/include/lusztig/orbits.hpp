#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "ffield.hpp"
#include "liealg.hpp"
#include "matrix.hpp"
#include "qforms.hpp"
#include "triangular.hpp"

namespace lusztig {

/**
 * @brief A rational nilpotent orbit: partition plus one form class per even part size.
 *
 * forms[k] is the class attached to the part 2(k+1); it is empty exactly when
 * that part does not occur. Form is FiniteFormClass over F_p and
 * PadicFormClass for the symbolic p-adic labels.
 */
template <class Form>
struct BasicOrbitLabel {
  SymplecticPartition partition;
  std::vector<Form> forms;

  const Form& form(int even_part) const { return forms.at(static_cast<std::size_t>(even_part / 2 - 1)); }

  friend bool operator==(const BasicOrbitLabel&, const BasicOrbitLabel&) = default;
  friend auto operator<=>(const BasicOrbitLabel& a, const BasicOrbitLabel& b) {
    if (auto c = b.partition <=> a.partition; c != 0) return c;  // lexicographic-descending partitions
    return a.forms <=> b.forms;
  }
};

using OrbitLabel = BasicOrbitLabel<FiniteFormClass>;
using PadicOrbitLabel = BasicOrbitLabel<PadicFormClass>;

/// Partitions of 2n whose odd parts have even multiplicity, lexicographic-descending.
inline std::vector<SymplecticPartition> enumerate_admissible_partitions(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "rank must be >= 1");
  std::vector<SymplecticPartition> out;
  std::vector<int> parts;
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      SymplecticPartition lambda(parts);
      if (lambda.admissible()) out.push_back(std::move(lambda));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      recurse(remaining - part, part);
      parts.pop_back();
    }
  };
  recurse(2 * n, 2 * n);
  return out;
}

namespace detail {

/// Cartesian product over even parts, first even part most significant.
template <class Form, class ClassesOf>
std::vector<BasicOrbitLabel<Form>> label_product(const SymplecticPartition& lambda, ClassesOf classes_of) {
  if (!lambda.admissible()) fail(ErrorKind::InvalidArgument, "partition " + lambda.to_string() + " is not admissible");
  const int n = lambda.rank();
  std::vector<std::vector<Form>> choices;
  for (int j = 2; j <= 2 * n; j += 2) choices.push_back(classes_of(lambda.multiplicity(j)));
  std::vector<BasicOrbitLabel<Form>> out;
  std::vector<Form> current;
  std::function<void(std::size_t)> recurse = [&](std::size_t k) {
    if (k == choices.size()) {
      out.push_back({lambda, current});
      return;
    }
    for (const auto& f : choices[k]) {
      current.push_back(f);
      recurse(k + 1);
      current.pop_back();
    }
  };
  recurse(0);
  return out;
}

}  // namespace detail

inline std::vector<OrbitLabel> enumerate_rational_orbits_finite(const SymplecticPartition& lambda, const FieldSpec&) {
  return detail::label_product<FiniteFormClass>(lambda, [](int m) { return finite_form_classes(m); });
}

/// Every finite label at rank n, in canonical order.
inline std::vector<OrbitLabel> enumerate_all_rational_orbits_finite(int n, const FieldSpec& field) {
  std::vector<OrbitLabel> out;
  for (const auto& lambda : enumerate_admissible_partitions(n)) {
    auto labels = enumerate_rational_orbits_finite(lambda, field);
    out.insert(out.end(), labels.begin(), labels.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Representatives
// ---------------------------------------------------------------------------

/// One nonzero entry of a representative: +-1, or +-(the form coefficient of a block).
struct LayoutEntry {
  std::size_t row;
  std::size_t col;
  int sign;
  int even_part;  // 0 for a constant entry
  int copy;       // which diagonal coefficient of the even part's form
};

/**
 * Symplectic Jordan-block assembly. Blocks are ordered by increasing part
 * size; each block owns consecutive e-coordinates and the matching
 * f-coordinates. An even part 2k with coefficient q is the chain
 * f_1 -> -f_2 -> ... -> b e_k -> ... -> e_1 with b = (-1)^{k-1} q, so that
 * omega(X^{2k-1} f_1, f_1) = q. A pair of odd parts k is a Jordan block A on
 * the e side and -A^t on the f side.
 */
inline std::vector<LayoutEntry> representative_layout(const SymplecticPartition& lambda) {
  if (!lambda.admissible()) fail(ErrorKind::InvalidArgument, "partition " + lambda.to_string() + " is not admissible");
  const auto n = static_cast<std::size_t>(lambda.rank());
  std::vector<int> sizes = lambda.parts();
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::vector<LayoutEntry> entries;
  std::size_t offset = 0;
  auto chain = [&](std::size_t o, std::size_t k) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      entries.push_back({o + i, o + i + 1, 1, 0, 0});
      entries.push_back({n + o + i + 1, n + o + i, -1, 0, 0});
    }
  };
  for (int j : sizes) {
    const int m = lambda.multiplicity(j);
    if (j % 2 == 1) {
      for (int c = 0; c < m / 2; ++c) {
        chain(offset, static_cast<std::size_t>(j));
        offset += static_cast<std::size_t>(j);
      }
    } else {
      const auto k = static_cast<std::size_t>(j / 2);
      for (int c = 0; c < m; ++c) {
        chain(offset, k);
        entries.push_back({offset + k - 1, n + offset + k - 1, k % 2 == 1 ? 1 : -1, j, c});
        offset += k;
      }
    }
  }
  return entries;
}

inline bool is_exhibited_shape(const SymplecticPartition& lambda) {
  const auto& parts = lambda.parts();
  return is_extended_lusztig_partition(lambda) || std::all_of(parts.begin(), parts.end(), [](int x) { return x <= 2; });
}

struct RepresentativeOptions {
  bool allow_general_shapes = true;
};

/// X in sp_2n(F_p) with jordan_partition(X) = lambda and classify_nilpotent(X) = label.
inline Matrix representative(const OrbitLabel& label, const FieldSpec& field, RepresentativeOptions options = {}) {
  const auto& lambda = label.partition;
  if (!options.allow_general_shapes && !is_exhibited_shape(lambda))
    fail(ErrorKind::UnsupportedShape, "no exhibited representative pattern for " + lambda.to_string());
  const auto n = static_cast<std::size_t>(lambda.rank());
  if (label.forms.size() != n) fail(ErrorKind::DimensionMismatch, "label needs one form per even part size");
  std::map<int, std::vector<FFElem>> coefficients;
  for (int j = 2; j <= static_cast<int>(2 * n); j += 2) {
    const auto& cls = label.form(j);
    if (cls.dim != lambda.multiplicity(j)) fail(ErrorKind::InvalidArgument, "form dimension must equal multiplicity");
    coefficients[j] = finite_representative(cls, field);
  }
  Matrix x(2 * n, 2 * n, field.p());
  for (const auto& e : representative_layout(lambda)) {
    std::int64_t value = e.sign;
    if (e.even_part != 0) value *= coefficients[e.even_part][static_cast<std::size_t>(e.copy)].value;
    x.set(e.row, e.col, value);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/**
 * Invariant extraction. For each even part j the quotient
 * ker X^j / (ker X^{j-1} + X ker X^{j+1}) has dimension m_j and carries the
 * symmetric form (v, w) -> omega(X^{j-1} v, w); its class is Q_j.
 */
inline OrbitLabel classify_nilpotent(const Matrix& x, const FieldSpec& field) {
  require_even_square(x);
  if (x.p() != field.p()) fail(ErrorKind::DimensionMismatch, "matrix modulus differs from field");
  if (!is_symplectic_lie(x)) fail(ErrorKind::NotInAlgebra, "matrix is not in the symplectic Lie algebra");
  if (!is_nilpotent(x)) fail(ErrorKind::NotNilpotent, "matrix is not nilpotent");
  const std::size_t size = x.rows();
  const std::size_t n = size / 2;

  OrbitLabel label;
  label.partition = jordan_partition(x);

  std::vector<Matrix> powers{Matrix::identity(size, field.p())};
  for (std::size_t k = 1; k <= size + 1; ++k) powers.push_back(powers.back() * x);
  auto kernel = [&](std::size_t k) { return linalg::nullspace(powers[k]); };

  for (std::size_t j = 2; j <= 2 * n; j += 2) {
    const int m = label.partition.multiplicity(static_cast<int>(j));
    if (m == 0) {
      label.forms.push_back(FiniteFormClass::empty());
      continue;
    }
    std::vector<Vec> radical = kernel(j - 1);
    for (const auto& v : kernel(j + 1)) radical.push_back(x.apply(v));
    const auto complement = linalg::extend_basis(radical, kernel(j), size, field.p());
    if (static_cast<int>(complement.size()) != m)
      fail(ErrorKind::InvalidArgument, "primitive quotient has unexpected dimension");
    Matrix gram(complement.size(), complement.size(), field.p());
    for (std::size_t a = 0; a < complement.size(); ++a) {
      const Vec lifted = powers[j - 1].apply(complement[a]);
      for (std::size_t b = 0; b < complement.size(); ++b)
        gram(a, b) = symplectic_pairing(lifted, complement[b], field.p());
    }
    label.forms.push_back(classify_gram_finite(gram));
  }
  return label;
}

// ---------------------------------------------------------------------------
// Brute-force conjugation oracle
// ---------------------------------------------------------------------------

/// Set partition of the nilpotent cone of sp_2n(F_p) into Sp_2n(F_p)-orbits.
struct OrbitPartition {
  SpAlgebra algebra;
  std::vector<std::vector<std::uint64_t>> orbits;  // members sorted; orbits ordered by least member
  std::unordered_map<std::uint64_t, std::size_t> orbit_of;

  std::uint64_t cone_size() const noexcept { return orbit_of.size(); }
};

/// Enumerates the cone and unions it into orbits by BFS under conjugation by sp_generators.
inline OrbitPartition orbit_partition_oracle(int n, const FieldSpec& field) {
  SpAlgebra algebra({n}, field);
  algebra.require_enumerable();

  std::vector<std::uint64_t> cone;
  for (std::uint64_t idx = 0; idx < algebra.cardinality(); ++idx)
    if (is_nilpotent(algebra.matrix(idx))) cone.push_back(idx);

  std::vector<std::pair<Matrix, Matrix>> actions;
  for (auto& g : sp_generators(static_cast<std::size_t>(n), field)) actions.emplace_back(g, symplectic_inverse(g));

  OrbitPartition result{algebra, {}, {}};
  result.orbit_of.reserve(cone.size());
  for (auto start : cone) {
    if (result.orbit_of.contains(start)) continue;
    const std::size_t id = result.orbits.size();
    std::vector<std::uint64_t> members{start};
    result.orbit_of.emplace(start, id);
    std::deque<std::uint64_t> queue{start};
    while (!queue.empty()) {
      const Matrix x = algebra.matrix(queue.front());
      queue.pop_front();
      for (const auto& [g, g_inv] : actions) {
        const std::uint64_t next = algebra.index_of(conjugate(g, x, g_inv));
        if (result.orbit_of.emplace(next, id).second) {
          members.push_back(next);
          queue.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.orbits.push_back(std::move(members));
  }
  return result;
}

struct AtlasEntry {
  OrbitLabel label;
  Matrix representative;
  std::uint64_t size = 0;
};

struct OrbitAtlas {
  int n = 0;
  std::uint32_t p = 0;
  std::uint64_t cone_size = 0;
  std::size_t oracle_orbit_count = 0;
  std::vector<AtlasEntry> entries;
};

/// Every label with its representative and the size of its oracle orbit.
inline OrbitAtlas build_atlas(int n, const FieldSpec& field, const OrbitPartition& oracle) {
  OrbitAtlas atlas{n, field.p(), oracle.cone_size(), oracle.orbits.size(), {}};
  for (auto& label : enumerate_all_rational_orbits_finite(n, field)) {
    Matrix rep = representative(label, field);
    const auto id = oracle.orbit_of.at(oracle.algebra.index_of(rep));
    atlas.entries.push_back({std::move(label), std::move(rep), oracle.orbits[id].size()});
  }
  return atlas;
}

inline OrbitAtlas build_atlas(int n, const FieldSpec& field) { return build_atlas(n, field, orbit_partition_oracle(n, field)); }

// ---------------------------------------------------------------------------
// Symbolic p-adic labels
// ---------------------------------------------------------------------------

struct PadicOrbitEntry {
  PadicOrbitLabel label;
  /// Diagonal representative of forms[k], empty when the part does not occur.
  std::vector<std::vector<PadicDiagEntry>> form_representatives;
  /// 2n x 2n grid with "0", "+-1" or +-(square class name) where the block pattern puts Q-entries.
  std::vector<std::vector<std::string>> symbolic_matrix;
};

inline std::vector<PadicOrbitEntry> enumerate_rational_orbits_padic(const SymplecticPartition& lambda,
                                                                    const FieldSpec& field) {
  for (int part : lambda.parts())
    if (part % 2 == 0 && lambda.multiplicity(part) > kMaxPadicFormDim)
      fail(ErrorKind::UnsupportedDimension, "p-adic labels need every even multiplicity <= 4");
  const auto labels =
      detail::label_product<PadicFormClass>(lambda, [&](int m) { return padic_form_classes(m, field); });
  const auto layout = representative_layout(lambda);
  const auto n = static_cast<std::size_t>(lambda.rank());

  std::vector<PadicOrbitEntry> out;
  for (const auto& label : labels) {
    PadicOrbitEntry entry{label, {}, std::vector<std::vector<std::string>>(2 * n, std::vector<std::string>(2 * n, "0"))};
    for (const auto& cls : label.forms) entry.form_representatives.push_back(padic_representative(cls, field));
    for (const auto& e : layout) {
      std::string text = e.even_part == 0
                             ? "1"
                             : entry.form_representatives[static_cast<std::size_t>(e.even_part / 2 - 1)]
                                                         [static_cast<std::size_t>(e.copy)]
                                                             .name();
      entry.symbolic_matrix[e.row][e.col] = (e.sign < 0 ? "-" : "") + text;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace lusztig
