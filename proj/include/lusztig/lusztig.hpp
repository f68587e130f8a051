#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "ffield.hpp"
#include "orbits.hpp"
#include "qforms.hpp"
#include "triangular.hpp"

namespace lusztig {

/**
 * @brief Finitely supported complex function on sp_2n(F_p) or a product of such.
 *
 * Values are keyed by SpAlgebra point index; absent keys are zero.
 */
struct ClassFunction {
  SpAlgebra algebra;
  std::map<std::uint64_t, Complex> values;

  Complex at(std::uint64_t index) const {
    const auto it = values.find(index);
    return it == values.end() ? Complex{} : it->second;
  }

  double sup_norm() const {
    double m = 0;
    for (const auto& [_, v] : values) m = std::max(m, std::abs(v));
    return m;
  }

  double l2_norm_squared() const {
    double s = 0;
    for (const auto& [_, v] : values) s += std::norm(v);
    return s;
  }
};

inline ClassFunction delta_function(const SpAlgebra& algebra, std::uint64_t index, Complex value = 1.0) {
  return {algebra, {{index, value}}};
}

/// f composed with X -> -X.
inline ClassFunction parity(const ClassFunction& f) {
  ClassFunction g{f.algebra, {}};
  const std::uint32_t p = f.algebra.p();
  for (const auto& [idx, v] : f.values) {
    Vec c = f.algebra.coords(idx);
    for (auto& x : c) x = x == 0 ? 0 : p - x;
    g.values.emplace(f.algebra.index(c), v);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Lusztig functions
// ---------------------------------------------------------------------------

/// Product over even parts i = 2 mod 4 of sgn((-1)^{floor(dim Q_i / 2)} det Q_i).
inline int circ_sgn(const OrbitLabel& label, const FieldSpec& field) {
  if (!is_extended_lusztig_partition(label.partition))
    fail(ErrorKind::WrongSupport, label.partition.to_string() + " is not a (extended) Lusztig partition");
  const int minus_one = field.sgn(field.elem(-1));
  int sign = 1;
  for (std::size_t k = 0; k < label.forms.size(); ++k) {
    const int part = 2 * static_cast<int>(k + 1);
    if ((part / 2) % 2 == 0) continue;
    const auto& q = label.forms[k];
    if (q.is_empty()) continue;
    sign *= q.disc_sign * ((q.dim / 2) % 2 == 0 ? 1 : minus_one);
  }
  return sign;
}

/// Label-coefficient form of the Lusztig function on sp_2n(F_p).
struct LusztigCoefficients {
  int n = 0;
  SymplecticPartition partition;
  std::vector<std::pair<OrbitLabel, int>> terms;
};

inline LusztigCoefficients lusztig_coefficients(int n, const FieldSpec& field) {
  LusztigCoefficients out{n, lusztig_partition(n), {}};
  for (auto& label : enumerate_rational_orbits_finite(out.partition, field)) {
    const int sign = circ_sgn(label, field);
    out.terms.emplace_back(std::move(label), sign);
  }
  return out;
}

/// Materialized Lusztig function, assigning each oracle orbit the coefficient of its classified label.
inline ClassFunction lusztig_function(int n, const FieldSpec& field, const OrbitPartition& oracle) {
  const auto coefficients = lusztig_coefficients(n, field);
  std::map<OrbitLabel, int> lookup;
  for (const auto& [label, sign] : coefficients.terms) lookup.emplace(label, sign);
  ClassFunction f{oracle.algebra, {}};
  for (const auto& orbit : oracle.orbits) {
    const auto label = classify_nilpotent(oracle.algebra.matrix(orbit.front()), field);
    const auto it = lookup.find(label);
    if (it == lookup.end()) continue;
    for (auto idx : orbit) f.values.emplace(idx, Complex(it->second, 0.0));
  }
  return f;
}

inline ClassFunction lusztig_function(int n, const FieldSpec& field) {
  if (!is_triangular(n) || n < 1) fail(ErrorKind::NotTriangular, std::to_string(n) + " is not triangular");
  return lusztig_function(n, field, orbit_partition_oracle(n, field));
}

/// f1(Y1) f2(Y2) on the product algebra of the two factors.
inline ClassFunction product_function(const ClassFunction& f1, const ClassFunction& f2) {
  if (f1.algebra.is_product() || f2.algebra.is_product() || f1.algebra.p() != f2.algebra.p())
    fail(ErrorKind::InvalidArgument, "product needs two single-factor functions over the same field");
  SpAlgebra product({f1.algebra.ranks().front(), f2.algebra.ranks().front()}, f1.algebra.field());
  ClassFunction f{product, {}};
  const std::uint64_t scale = f2.algebra.cardinality();
  for (const auto& [i1, v1] : f1.values)
    for (const auto& [i2, v2] : f2.values) f.values.emplace(i1 * scale + i2, v1 * v2);
  return f;
}

inline ClassFunction product_lusztig_function(int delta1, int delta2, const FieldSpec& field) {
  if (!is_triangular(delta1) || !is_triangular(delta2) || delta1 < 1 || delta2 < 1)
    fail(ErrorKind::NotTriangular, "both factors must have positive triangular rank");
  SpAlgebra({delta1, delta2}, field).require_enumerable();
  const auto f1 = lusztig_function(delta1, field);
  const auto f2 = delta1 == delta2 ? f1 : lusztig_function(delta2, field);
  return product_function(f1, f2);
}

// ---------------------------------------------------------------------------
// Fourier transform
// ---------------------------------------------------------------------------

/// F(f)(X) at the given points: p^{-dim/2} sum_{Y in supp f} psi(<X, Y>) f(Y).
inline ClassFunction fourier_transform_at(const ClassFunction& f, std::span<const std::uint64_t> points) {
  const SpAlgebra& algebra = f.algebra;
  const std::uint32_t p = algebra.p();
  const std::size_t dim = algebra.dim();
  std::vector<Complex> psi(p);
  for (std::uint32_t x = 0; x < p; ++x) psi[x] = additive_character(FFElem{x}, algebra.field());

  std::vector<Vec> support;
  std::vector<Complex> weights;
  for (const auto& [idx, v] : f.values) {
    support.push_back(algebra.coords(idx));
    weights.push_back(v);
  }
  const double scale = std::pow(static_cast<double>(p), -0.5 * static_cast<double>(dim));
  const Matrix& gram = algebra.gram();

  ClassFunction out{algebra, {}};
  Vec functional(dim);
  for (auto idx : points) {
    const Vec x = algebra.coords(idx);
    // <X, Y> = (G x) . y
    for (std::size_t l = 0; l < dim; ++l) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < dim; ++k) acc += std::uint64_t{x[k]} * gram(k, l);
      functional[l] = static_cast<std::uint32_t>(acc % p);
    }
    Complex sum{};
    for (std::size_t s = 0; s < support.size(); ++s) {
      std::uint64_t acc = 0;
      const Vec& y = support[s];
      for (std::size_t l = 0; l < dim; ++l) acc += std::uint64_t{functional[l]} * y[l];
      sum += psi[acc % p] * weights[s];
    }
    out.values.emplace(idx, sum * scale);
  }
  return out;
}

/// F(f) at every point of an enumerable algebra.
inline ClassFunction fourier_transform(const ClassFunction& f) {
  f.algebra.require_enumerable();
  std::vector<std::uint64_t> points(f.algebra.cardinality());
  for (std::uint64_t i = 0; i < points.size(); ++i) points[i] = i;
  return fourier_transform_at(f, points);
}

/// tau^n.
inline Complex predicted_eigenvalue(int n, const FieldSpec& field) {
  const Complex t = tau(field);
  Complex result{1.0, 0.0};
  for (int k = 0; k < n; ++k) result *= t;
  return result;
}

struct EigenReport {
  bool is_eigenfunction = false;
  std::optional<Complex> eigenvalue;
  double max_residual = 0;
  Complex predicted;
  bool matches_prediction = false;
};

/// Measures F(f) = gamma f over the whole algebra; gamma is read off at the first max-|f| point.
inline EigenReport eigen_check(const ClassFunction& f, const FieldSpec& field, double tolerance = kDefaultTolerance) {
  std::optional<std::uint64_t> anchor;
  double best = 0;
  for (const auto& [idx, v] : f.values)
    if (std::abs(v) > best) {
      best = std::abs(v);
      anchor = idx;
    }
  if (!anchor || best <= tolerance) fail(ErrorKind::ZeroFunction, "eigen check of the zero function");

  const ClassFunction transformed = fourier_transform(f);
  const Complex gamma = transformed.at(*anchor) / f.at(*anchor);
  double residual = 0;
  for (const auto& [idx, v] : transformed.values) residual = std::max(residual, std::abs(v - gamma * f.at(idx)));

  EigenReport report;
  report.max_residual = residual;
  report.predicted = predicted_eigenvalue(f.algebra.total_rank(), field);
  report.is_eigenfunction = residual < tolerance;
  if (report.is_eigenfunction) {
    report.eigenvalue = gamma;
    report.matches_prediction = approx_equal(gamma, report.predicted, tolerance);
  }
  return report;
}

}  // namespace lusztig
