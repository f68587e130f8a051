#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "matrix.hpp"

namespace lusztig {

// ---------------------------------------------------------------------------
// Forms over the residue field F_p
// ---------------------------------------------------------------------------

/// Isometry class over F_p: dimension and sign of sgn(det). disc_sign is 0 only for the empty form.
struct FiniteFormClass {
  int dim = 0;
  int disc_sign = 0;

  static constexpr FiniteFormClass empty() noexcept { return {}; }
  constexpr bool is_empty() const noexcept { return dim == 0; }

  friend constexpr bool operator==(FiniteFormClass, FiniteFormClass) = default;
  friend constexpr auto operator<=>(const FiniteFormClass& a, const FiniteFormClass& b) noexcept {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return b.disc_sign <=> a.disc_sign;  // +1 sorts before -1
  }
};

inline FiniteFormClass classify_diagonal_finite(std::span<const FFElem> entries, const FieldSpec& field) {
  FFElem det{1};
  for (auto e : entries) {
    if (e.value % field.p() == 0) fail(ErrorKind::ZeroEntry, "diagonal form has a zero entry");
    det = field.mul(det, e);
  }
  if (entries.empty()) return FiniteFormClass::empty();
  return {static_cast<int>(entries.size()), field.sgn(det)};
}

/// Class of a nondegenerate symmetric Gram matrix; throws ZeroEntry if it is degenerate.
inline FiniteFormClass classify_gram_finite(const Matrix& gram) {
  if (!gram.square()) fail(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  if (gram.rows() == 0) return FiniteFormClass::empty();
  const FieldSpec field(gram.p());
  const std::uint32_t det = linalg::determinant(gram);
  if (det == 0) fail(ErrorKind::ZeroEntry, "Gram matrix is degenerate");
  return {static_cast<int>(gram.rows()), field.sgn(FFElem{det})};
}

/// The two classes of each positive dimension, square discriminant first.
inline std::vector<FiniteFormClass> finite_form_classes(int dim) {
  if (dim == 0) return {FiniteFormClass::empty()};
  return {{dim, 1}, {dim, -1}};
}

/// Diagonal representative [1, ..., 1, t] with t = 1 or the least nonsquare.
inline std::vector<FFElem> finite_representative(FiniteFormClass cls, const FieldSpec& field) {
  std::vector<FFElem> entries(static_cast<std::size_t>(cls.dim), FFElem{1});
  if (cls.dim > 0 && cls.disc_sign == -1) entries.back() = field.nonsquare();
  return entries;
}

/// Value of the diagonal form at v.
inline FFElem evaluate_diagonal(std::span<const FFElem> entries, std::span<const std::uint32_t> v,
                                const FieldSpec& field) {
  FFElem acc{0};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const FFElem x{v[i]};
    acc = field.add(acc, field.mul(entries[i], field.mul(x, x)));
  }
  return acc;
}

inline constexpr std::uint64_t kIsotropySearchCap = 10'000'000;

/// Exhaustive search for a nonzero isotropic vector of a diagonal form.
inline std::optional<Vec> find_isotropic_vector(std::span<const FFElem> entries, const FieldSpec& field) {
  const std::size_t dim = entries.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= field.p();
    if (total > kIsotropySearchCap) fail(ErrorKind::TooLarge, "isotropy search exceeds p^dim cap");
  }
  Vec v(dim, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = static_cast<std::uint32_t>(c % field.p());
      c /= field.p();
    }
    if (evaluate_diagonal(entries, v, field).value == 0) return v;
  }
  return std::nullopt;
}

struct WittDecomposition {
  int hyperbolic_planes = 0;
  FiniteFormClass anisotropic;
};

/// Q = H^m + Q_aniso. Splits off one hyperbolic plane per isotropic vector found.
inline WittDecomposition witt_decompose(std::span<const FFElem> entries, const FieldSpec& field) {
  FiniteFormClass current = classify_diagonal_finite(entries, field);
  const int minus_one = field.sgn(field.elem(-1));
  int planes = 0;
  while (current.dim >= 2) {
    const auto rep = finite_representative(current, field);
    if (!find_isotropic_vector(rep, field)) break;
    // disc(Q) = disc(H) disc(Q') with disc(H) = -1.
    current = current.dim == 2 ? FiniteFormClass::empty() : FiniteFormClass{current.dim - 2, current.disc_sign * minus_one};
    ++planes;
  }
  return {planes, current};
}

// ---------------------------------------------------------------------------
// Square classes and forms over the p-adic field (odd residue characteristic)
// ---------------------------------------------------------------------------

/// Element of F^x/(F^x)^2 = {1, eps, pi, eps pi}; odd valuation is realized by pi^{-1}.
struct PadicSquareClass {
  std::uint8_t unit = 0;       // 0: unit part 1, 1: unit part eps
  std::uint8_t valuation = 0;  // parity of the valuation

  static constexpr PadicSquareClass one() noexcept { return {0, 0}; }
  static constexpr PadicSquareClass eps() noexcept { return {1, 0}; }
  static constexpr PadicSquareClass pi() noexcept { return {0, 1}; }
  static constexpr PadicSquareClass eps_pi() noexcept { return {1, 1}; }

  /// Class of -1: a square iff p = 1 mod 4.
  static PadicSquareClass minus_one(const FieldSpec& field) noexcept {
    return {static_cast<std::uint8_t>(field.minus_one_is_square() ? 0 : 1), 0};
  }

  static constexpr std::array<PadicSquareClass, 4> all() noexcept { return {one(), eps(), pi(), eps_pi()}; }

  constexpr int index() const noexcept { return valuation * 2 + unit; }

  constexpr PadicSquareClass operator*(PadicSquareClass o) const noexcept {
    return {static_cast<std::uint8_t>(unit ^ o.unit), static_cast<std::uint8_t>(valuation ^ o.valuation)};
  }

  std::string name() const {
    static constexpr std::string_view names[] = {"1", "eps", "pi^-1", "eps*pi^-1"};
    return std::string(names[index()]);
  }

  friend constexpr bool operator==(PadicSquareClass, PadicSquareClass) = default;
  friend constexpr auto operator<=>(PadicSquareClass a, PadicSquareClass b) noexcept { return a.index() <=> b.index(); }
};

using PadicDiagEntry = PadicSquareClass;

/// Parses "1", "eps", "pi", "pi^-1", "eps*pi", "eps*pi^-1", each optionally prefixed by '-'.
inline PadicSquareClass parse_square_class(std::string_view text, const FieldSpec& field) {
  bool negated = false;
  if (!text.empty() && text.front() == '-') {
    negated = true;
    text.remove_prefix(1);
  }
  PadicSquareClass cls;
  if (text == "1") {
    cls = PadicSquareClass::one();
  } else if (text == "eps") {
    cls = PadicSquareClass::eps();
  } else if (text == "pi" || text == "pi^-1") {
    cls = PadicSquareClass::pi();
  } else if (text == "eps*pi" || text == "eps*pi^-1") {
    cls = PadicSquareClass::eps_pi();
  } else {
    fail(ErrorKind::InvalidArgument, "unrecognized square class '" + std::string(text) + "'");
  }
  return negated ? cls * PadicSquareClass::minus_one(field) : cls;
}

/// Tame Hilbert symbol: sgn of (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} reduced to the residue field.
inline int hilbert_symbol(PadicSquareClass a, PadicSquareClass b, const FieldSpec& field) {
  int result = 1;
  if (a.valuation && b.valuation && !field.minus_one_is_square()) result = -result;
  if (a.unit && b.valuation) result = -result;
  if (b.unit && a.valuation) result = -result;
  return result;
}

struct PadicFormClass {
  int dim = 0;
  PadicSquareClass disc;
  int hasse = 1;

  static constexpr PadicFormClass empty() noexcept { return {}; }
  constexpr bool is_empty() const noexcept { return dim == 0; }

  friend constexpr bool operator==(const PadicFormClass&, const PadicFormClass&) = default;
  friend constexpr auto operator<=>(const PadicFormClass& a, const PadicFormClass& b) noexcept {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    if (auto c = a.disc <=> b.disc; c != 0) return c;
    return b.hasse <=> a.hasse;
  }
};

/// dim, product of square classes, and Hasse invariant prod_{i<j} (a_i, a_j).
inline PadicFormClass classify_diagonal_padic(std::span<const PadicDiagEntry> entries, const FieldSpec& field) {
  if (entries.empty()) fail(ErrorKind::EmptyForm, "cannot classify an empty diagonal form");
  PadicFormClass cls{static_cast<int>(entries.size()), PadicSquareClass::one(), 1};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    cls.disc = cls.disc * entries[i];
    for (std::size_t j = i + 1; j < entries.size(); ++j) cls.hasse *= hilbert_symbol(entries[i], entries[j], field);
  }
  return cls;
}

/// One expanded row of the anisotropic representative table.
struct Figure1Row {
  std::string text;
  std::vector<PadicDiagEntry> entries;
};

namespace detail {

struct SymbolicEntry {
  bool negated;
  PadicSquareClass cls;

  std::string text() const { return (negated ? "-" : "") + cls.name(); }
  PadicSquareClass normalize(const FieldSpec& field) const {
    return negated ? cls * PadicSquareClass::minus_one(field) : cls;
  }
};

inline Figure1Row make_row(std::initializer_list<SymbolicEntry> symbols, const FieldSpec& field) {
  Figure1Row row;
  row.text = symbols.size() == 1 ? "[" : "diag(";
  bool first = true;
  for (const auto& s : symbols) {
    if (!first) row.text += ", ";
    first = false;
    row.text += s.text();
    row.entries.push_back(s.normalize(field));
  }
  row.text += symbols.size() == 1 ? "]" : ")";
  return row;
}

}  // namespace detail

/// Diagonal representatives of the anisotropic classes, dimensions 1 to 4, parameters expanded.
inline std::vector<Figure1Row> figure1_rows(const FieldSpec& field) {
  using detail::make_row;
  using detail::SymbolicEntry;
  constexpr auto one = PadicSquareClass::one();
  constexpr auto eps = PadicSquareClass::eps();
  constexpr auto pi = PadicSquareClass::pi();
  constexpr auto eps_pi = PadicSquareClass::eps_pi();
  const std::array<PadicSquareClass, 2> units = {one, eps};

  std::vector<Figure1Row> rows;
  for (auto t : PadicSquareClass::all()) rows.push_back(make_row({{false, t}}, field));
  for (auto t : {one, pi}) rows.push_back(make_row({{false, t}, {false, eps * t}}, field));
  for (auto t : units)
    for (auto t2 : units) rows.push_back(make_row({{false, t * pi}, {true, t2}}, field));
  for (auto t : units) rows.push_back(make_row({{false, one}, {true, eps}, {false, t * pi}}, field));
  for (auto t : units) rows.push_back(make_row({{false, pi}, {true, eps_pi}, {false, t}}, field));
  rows.push_back(make_row({{false, one}, {true, eps}, {true, pi}, {false, eps_pi}}, field));
  return rows;
}

/// First table row (in table order) whose class equals cls.
inline std::vector<PadicDiagEntry> figure1_representative(const PadicFormClass& cls, const FieldSpec& field) {
  if (cls.dim < 1 || cls.dim > 4)
    fail(ErrorKind::Unrealizable, "anisotropic table covers dimensions 1 to 4 only");
  for (const auto& row : figure1_rows(field))
    if (static_cast<int>(row.entries.size()) == cls.dim && classify_diagonal_padic(row.entries, field) == cls)
      return row.entries;
  fail(ErrorKind::Unrealizable, "no anisotropic table row realizes the requested class");
}

inline constexpr int kMaxPadicFormDim = 4;

/// Every isometry class of dimension dim (1..4), found by exhausting diagonal forms over the four square classes.
inline std::vector<PadicFormClass> padic_form_classes(int dim, const FieldSpec& field) {
  if (dim == 0) return {PadicFormClass::empty()};
  if (dim < 0 || dim > kMaxPadicFormDim)
    fail(ErrorKind::UnsupportedDimension, "p-adic form classes are enumerated for dimension <= 4");
  std::vector<PadicFormClass> classes;
  std::vector<PadicDiagEntry> entries(static_cast<std::size_t>(dim));
  const int total = 1 << (2 * dim);
  for (int code = 0; code < total; ++code) {
    for (int i = 0; i < dim; ++i) entries[static_cast<std::size_t>(i)] = PadicSquareClass::all()[(code >> (2 * i)) & 3];
    const auto cls = classify_diagonal_padic(entries, field);
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// Diagonal representative: the table row if one matches, else H + smaller representative, else search.
inline std::vector<PadicDiagEntry> padic_representative(const PadicFormClass& cls, const FieldSpec& field) {
  if (cls.is_empty()) return {};
  if (cls.dim > kMaxPadicFormDim) fail(ErrorKind::UnsupportedDimension, "p-adic representatives cover dimension <= 4");
  for (const auto& row : figure1_rows(field))
    if (static_cast<int>(row.entries.size()) == cls.dim && classify_diagonal_padic(row.entries, field) == cls)
      return row.entries;
  const std::vector<PadicDiagEntry> hyperbolic = {PadicSquareClass::one(), PadicSquareClass::minus_one(field)};
  if (cls.dim == 2 && classify_diagonal_padic(hyperbolic, field) == cls) return hyperbolic;
  if (cls.dim > 2) {
    for (const auto& smaller : padic_form_classes(cls.dim - 2, field)) {
      auto entries = hyperbolic;
      const auto tail = padic_representative(smaller, field);
      entries.insert(entries.end(), tail.begin(), tail.end());
      if (classify_diagonal_padic(entries, field) == cls) return entries;
    }
  }
  std::vector<PadicDiagEntry> entries(static_cast<std::size_t>(cls.dim));
  for (int code = 0; code < (1 << (2 * cls.dim)); ++code) {
    for (int i = 0; i < cls.dim; ++i) entries[static_cast<std::size_t>(i)] = PadicSquareClass::all()[(code >> (2 * i)) & 3];
    if (classify_diagonal_padic(entries, field) == cls) return entries;
  }
  fail(ErrorKind::Unrealizable, "no diagonal form realizes the requested class");
}

}  // namespace lusztig
